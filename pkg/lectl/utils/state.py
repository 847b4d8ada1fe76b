"""Class to maintain Click program state"""
from lectl.config.operations import load_config, resolve_setup


class ProgramState:
    """Class to maintain Click program state"""

    def __init__(self, config_file, seed=None, trials=None, jobs=1, debug=False):
        """Create the Program State"""
        self.config_file = config_file
        self.seed = seed
        self.trials = trials
        self.jobs = jobs
        self.debug = debug
        self._config = None
        self._setup = None

    def get_config(self):
        """
        Load the experiment configuration on first use and apply command line overrides

        :return: Parsed configuration
        :rtype: ExperimentConfig
        """
        if self._config is None:
            self._config = load_config(self.config_file, seed=self.seed, trials=self.trials)
        return self._config

    def get_setup(self):
        """
        Source, codeword distribution, test channel and distortion measure of the configuration

        :rtype: Setup
        """
        if self._setup is None:
            self._setup = resolve_setup(self.get_config())
        return self._setup

    def get_trials(self, default):
        """
        Trials from --trials, the configuration, or the command default, in that order

        :rtype: Int
        """
        config = self.get_config()
        return config.trials if config.trials is not None else default

    def get_config_file(self):
        """
        Retrieve configured or specified config file

        :return: Path to config file
        :rtype: String
        """
        return self.config_file
