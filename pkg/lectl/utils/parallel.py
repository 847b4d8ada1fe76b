"""Order-preserving parallel map over independent work items"""
import multiprocessing as mp


def ordered_map(function, items, jobs=1):
    """
    Apply function to every item, optionally in a pool of worker processes.
    Results are returned in input order regardless of the worker schedule.

    :param function: Picklable callable (module-level function or functools.partial of one)
    :param items: Work items
    :type items: Iterable
    :param jobs: Number of worker processes. 1 or less runs in-process
    :type jobs: Int
    :return: Results in input order
    :rtype: List
    """
    items = list(items)
    if jobs is None or jobs <= 1 or len(items) <= 1:
        return [function(item) for item in items]

    with mp.Pool(processes=min(jobs, len(items))) as pool:
        return pool.map(function, items)
