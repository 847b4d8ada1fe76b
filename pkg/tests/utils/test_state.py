from unittest.mock import patch
from lectl.utils.state import ProgramState


def test_program_state():
    program_state = ProgramState('tests/data/binary_hamming.ini', seed=None, trials=None, jobs=2, debug=False)

    assert program_state.get_config_file() == 'tests/data/binary_hamming.ini'
    assert program_state.jobs == 2
    assert not program_state.debug
    assert program_state.get_config().master_seed == 7
    assert program_state.get_trials(20) == 4
    assert program_state.get_setup().test_channel.input_size == 2


def test_program_state_overrides():
    program_state = ProgramState('tests/data/forward_channel.ini', seed=1, trials=3)

    assert program_state.get_config().master_seed == 1
    assert program_state.get_trials(20) == 3
    assert ProgramState('tests/data/forward_channel.ini').get_trials(20) == 20


@patch('lectl.utils.state.load_config')
def test_program_state_loads_lazily(mock_load_config):
    program_state = ProgramState('does/not/matter.ini', seed=5)

    assert not mock_load_config.called

    program_state.get_config()
    program_state.get_config()
    mock_load_config.assert_called_once_with('does/not/matter.ini', seed=5, trials=None)
