import os
import pytest
from lectl.utils.output import process_output, render_csv


@pytest.fixture
def rows():
    return [
        {'n': 4, 'R': 0.5, 'tv': 1.0 / 3.0, 'seed': 2 ** 64 - 1},
        {'n': 6, 'R': 0.75, 'tv': float('nan'), 'seed': 3}
    ]


def test_render_csv(rows):
    text = render_csv(rows, 'soft-cover')

    assert text == '# lectl soft-cover v1 columns=n,R,tv,seed\n' \
                   'n,R,tv,seed\n' \
                   '4,0.5,0.333333333333,18446744073709551615\n' \
                   '6,0.75,,3\n'


def test_process_output(tmpdir, capsys, rows):
    tmpfile = '{0}/pytest.tmp.csv'.format(tmpdir)

    process_output(rows, tmpfile, 'soft-cover')

    assert os.path.isfile(tmpfile)
    with open(tmpfile, newline='') as infile:
        assert infile.read() == render_csv(rows, 'soft-cover')

    process_output(rows, None, 'soft-cover')

    captured = capsys.readouterr()
    assert captured.out == render_csv(rows, 'soft-cover')


def test_process_output_without_rows():
    with pytest.raises(SystemExit) as error:
        process_output([], None, 'distortion')

    assert 'No output to write or display' in str(error.value)
