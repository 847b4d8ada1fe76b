"""Common functions for parsing numbers, lists and tables from configuration text"""
import re

ROW_SEPARATOR = re.compile(r'[\n;]')


def parse_number_list(text, convert=float):
    """
    Parse a whitespace or comma separated list of numbers

    :param text: Text to parse, e.g. "0.5 0.5" or "4, 6, 8"
    :type text: String
    :param convert: Conversion for each entry (float or int)
    :type convert: Callable
    :return: Parsed numbers
    :rtype: List
    """
    if not isinstance(text, str):
        raise TypeError('Not a string')

    tokens = text.replace(',', ' ').split()
    if not tokens:
        raise ValueError('Empty list')

    values = []
    for token in tokens:
        try:
            values.append(convert(token))
        except ValueError:
            raise ValueError('"{0}" is not a valid {1}'.format(token, 'integer' if convert is int else 'number'))
    return values


def parse_table(text):
    """
    Parse a row-per-line numeric table. Rows may also be separated by ";"

    :param text: Text to parse
    :type text: String
    :return: List of rows, each a list of floats
    :rtype: List
    """
    if not isinstance(text, str):
        raise TypeError('Not a string')

    rows = [parse_number_list(line) for line in ROW_SEPARATOR.split(text) if line.strip()]
    if not rows:
        raise ValueError('Empty table')

    widths = {len(row) for row in rows}
    if len(widths) != 1:
        raise ValueError('Rows have different lengths: {0}'.format(', '.join(str(len(row)) for row in rows)))
    return rows


def format_number_list(values):
    """
    Exact text form of a list of numbers (floats via repr)

    :rtype: String
    """
    return ' '.join(repr(float(value)) if not isinstance(value, int) else str(value) for value in values)


def format_table(rows, indent='    '):
    """
    Multi-line configuration value for a table, one row per line

    :rtype: String
    """
    return ''.join('\n{0}{1}'.format(indent, format_number_list(row)) for row in rows)
