"""Common functions for output related requirements"""
import click
import pandas as pd

FORMAT_VERSION = 'v1'
FLOAT_FORMAT = '%.12g'


def render_csv(rows, command):
    """
    Render rows as CSV text preceded by a versioned header comment

    :param rows: Rows with identical keys, in output order
    :type rows: List
    :param command: Name of the producing subcommand
    :type command: String
    :return: CSV text
    :rtype: String
    """
    frame = pd.DataFrame(list(rows))
    header = '# lectl {0} {1} columns={2}\n'.format(command, FORMAT_VERSION, ','.join(frame.columns))
    return header + frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator='\n')


def process_output(rows, outfile, command):
    """
    Output rows as CSV to stdout or file

    :param rows: The data to output
    :type rows: List
    :param outfile: The file to write the output to. stdout when None
    :type outfile: String
    :param command: Name of the producing subcommand
    :type command: String
    :return: None
    :rtype: None
    """
    if not rows:
        # Not necessarily an error, but we do want an exit code != 0
        raise SystemExit('No output to write or display')

    text = render_csv(rows, command)

    if outfile:
        with open(outfile, 'w', newline='') as ofile:
            ofile.write(text)
        return

    click.echo(text, nl=False)
