"""Reproducible seed derivation for independent random streams"""

MASK_64 = 0xFFFFFFFFFFFFFFFF
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX_1 = 0xBF58476D1CE4E5B9
MIX_2 = 0x94D049BB133111EB


def splitmix64(value):
    """
    SplitMix64 finalizer on a 64-bit integer

    :param value: Integer state
    :type value: Int
    :return: Mixed 64-bit integer
    :rtype: Int
    """
    z = value & MASK_64
    z = ((z ^ (z >> 30)) * MIX_1) & MASK_64
    z = ((z ^ (z >> 27)) * MIX_2) & MASK_64
    return z ^ (z >> 31)


def derive_seed(master_seed, index):
    """
    Derive the seed of stream number ``index`` from a master seed.
    Streams never need coordination, so trials can run in any order or process.

    :param master_seed: The master seed (unsigned 64-bit)
    :type master_seed: Int
    :param index: Stream index (trial number, sweep point, ...)
    :type index: Int
    :return: Derived unsigned 64-bit seed
    :rtype: Int
    """
    if master_seed < 0 or master_seed > MASK_64:
        raise ValueError('Seed must be an unsigned 64-bit integer: {0}'.format(master_seed))
    return splitmix64(master_seed + (index + 1) * GOLDEN_GAMMA)


def trial_seeds(master_seed, trials):
    """
    Seeds for trials 0..trials-1

    :param master_seed: The master seed
    :param trials: Number of trials
    :return: List of derived seeds
    :rtype: List
    """
    return [derive_seed(master_seed, trial) for trial in range(trials)]
