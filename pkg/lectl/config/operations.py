"""Config operations module"""
import configparser
import logging
import os
import re
from dataclasses import dataclass, field, replace
from typing import NamedTuple, Optional, Tuple
import numpy as np
from lectl.finite_prob.distributions import Channel, Pmf
from lectl.finite_prob.functions import joint_from, reverse_channel
from lectl.rd_solver.distortion import DistortionMeasure
from lectl.rd_solver.functions import DEFAULT_DISTORTION_TOL, rd_point_at_distortion
from lectl.utils.errors import ConfigError, ValidationError
from lectl.utils.parsing import format_number_list, format_table, parse_number_list, parse_table
from lectl.utils.seeding import MASK_64

log = logging.getLogger(__name__)

DEFAULT_CONFIG_FILE = 'lectl.ini'
CHANNEL_SECTIONS = ('test_channel', 'forward_channel', 'rate_distortion')
KNOWN_KEYS = {
    'source': ('probs',),
    'test_channel': ('output_probs', 'rows'),
    'forward_channel': ('rows',),
    'rate_distortion': ('target_distortion', 'tol'),
    'distortion': ('measure', 'table'),
    'experiment': ('n_list', 'rate_list', 'trials', 'master_seed', 'output'),
    'rd_curve': ('slopes', 'distortions')
}
# marginal of the test channel output farther than this from the source is reported
MARGINAL_TOL = 1e-9

SECTION_LINE = re.compile(r'^\s*\[([^\]]+)\]')
KEY_LINE = re.compile(r'^([^\s=:#;][^=:]*?)\s*[=:]')


@dataclass(frozen=True)
class ExperimentConfig:
    """Parsed and validated experiment configuration"""
    source: Pmf
    distortion: DistortionMeasure
    channel_kind: str
    n_list: Tuple[int, ...]
    rate_list: Tuple[float, ...]
    output_pmf: Optional[Pmf] = None
    test_channel: Optional[Channel] = None
    forward_channel: Optional[Channel] = None
    target_distortion: Optional[float] = None
    rd_tol: float = DEFAULT_DISTORTION_TOL
    hamming: bool = False
    trials: Optional[int] = None
    master_seed: int = 0
    output: Optional[str] = None
    rd_slopes: Optional[Tuple[float, ...]] = None
    rd_distortions: Optional[Tuple[float, ...]] = None
    path: str = field(default='<config>', compare=False)


class Setup(NamedTuple):
    """Everything the experiments need, with the test channel resolved"""
    source: Pmf
    output_pmf: Pmf
    test_channel: Channel
    distortion: DistortionMeasure


class _Locator:
    """Line numbers of sections and keys in the raw configuration text"""

    def __init__(self, text, path):
        self.path = path
        self.sections = {}
        self.keys = {}
        section = None
        for line_nr, line in enumerate(text.splitlines(), start=1):
            match = SECTION_LINE.match(line)
            if match:
                section = match.group(1).strip()
                self.sections.setdefault(section, line_nr)
                continue
            match = KEY_LINE.match(line)
            if match and section is not None:
                self.keys.setdefault((section, match.group(1).strip().lower()), line_nr)

    def error(self, section, key, message):
        line_nr = self.keys.get((section, key)) if key else None
        if line_nr is None:
            line_nr = self.sections.get(section)
        location = '{0}:{1}'.format(self.path, line_nr) if line_nr else self.path
        where = '[{0}] {1}'.format(section, key) if key else '[{0}]'.format(section)
        return ConfigError('{0}: {1}: {2}'.format(location, where, message))


class _Reader:
    """Typed access to configparser values that raises located ConfigErrors"""

    def __init__(self, parser, locator):
        self.parser = parser
        self.locator = locator

    def has(self, section, key=None):
        if key is None:
            return self.parser.has_section(section)
        return self.parser.has_option(section, key)

    def raw(self, section, key):
        if not self.has(section, key):
            raise self.locator.error(section, None, 'missing required key "{0}"'.format(key))
        return self.parser.get(section, key)

    def convert(self, section, key, function):
        try:
            return function(self.raw(section, key))
        except (ValueError, TypeError) as error:
            # ConfigError is a ValueError too
            if isinstance(error, ConfigError):
                raise
            raise self.locator.error(section, key, str(error))

    def numbers(self, section, key, convert=float):
        return tuple(self.convert(section, key, lambda text: parse_number_list(text, convert)))

    def number(self, section, key, convert=float):
        values = self.numbers(section, key, convert)
        if len(values) != 1:
            raise self.locator.error(section, key, 'expected a single value, got {0}'.format(len(values)))
        return values[0]

    def pmf(self, section, key):
        return self.convert(section, key, lambda text: Pmf(parse_number_list(text)))

    def channel(self, section, key):
        return self.convert(section, key, lambda text: Channel(parse_table(text)))


def _parse_distortion(reader, source_size, output_size):
    if not reader.has('distortion'):
        raise reader.locator.error('distortion', None, 'missing required section')

    measure = reader.raw('distortion', 'measure').strip().lower()
    if measure == 'hamming':
        # without a given reproduction alphabet hamming reproduces the source alphabet
        output_size = source_size if output_size is None else output_size
        if source_size != output_size:
            raise reader.locator.error('distortion', 'measure', 'hamming needs equal alphabets, got {0} and {1}'.format(
                source_size, output_size))
        return DistortionMeasure.hamming(source_size), True

    if measure != 'table':
        raise reader.locator.error('distortion', 'measure', 'expected "hamming" or "table", got "{0}"'.format(measure))

    distortion = reader.convert('distortion', 'table', lambda text: DistortionMeasure(parse_table(text)))
    expected = (source_size, output_size if output_size is not None else distortion.output_size)
    if distortion.table.shape != expected:
        raise reader.locator.error('distortion', 'table', 'expected a {0} x {1} table, got {2} x {3}'.format(
            expected[0], expected[1], distortion.source_size, distortion.output_size))
    return distortion, False


def _channel_kind(reader):
    present = [section for section in CHANNEL_SECTIONS if reader.has(section)]
    if len(present) != 1:
        section = present[1] if len(present) > 1 else 'test_channel'
        raise reader.locator.error(section, None, 'exactly one of {0} is required, found {1}'.format(
            ', '.join('[{0}]'.format(name) for name in CHANNEL_SECTIONS), len(present)))
    return present[0]


def _check_unknown_keys(parser, locator):
    for section in parser.sections():
        if section not in KNOWN_KEYS:
            raise locator.error(section, None, 'unknown section')
        for key in parser.options(section):
            if key not in KNOWN_KEYS[section]:
                raise locator.error(section, key, 'unknown key')


def parse_config(text, path='<config>'):
    """
    Parse and validate configuration text

    :param text: INI-style configuration
    :type text: String
    :param path: Name used in diagnostics
    :type path: String
    :return: The validated configuration
    :rtype: ExperimentConfig
    """
    parser = configparser.ConfigParser(interpolation=None, inline_comment_prefixes=('#',))
    try:
        parser.read_string(text, source=path)
    except configparser.Error as error:
        raise ConfigError('{0}: {1}'.format(path, str(error).replace('\n', ' ')))

    locator = _Locator(text, path)
    reader = _Reader(parser, locator)
    _check_unknown_keys(parser, locator)

    if not reader.has('source'):
        raise locator.error('source', None, 'missing required section')
    source = reader.pmf('source', 'probs')

    kind = _channel_kind(reader)
    settings = {'channel_kind': kind}

    if kind == 'test_channel':
        output_pmf = reader.pmf('test_channel', 'output_probs')
        test_channel = reader.channel('test_channel', 'rows')
        if test_channel.input_size != output_pmf.alphabet_size:
            raise locator.error('test_channel', 'rows', 'expected {0} rows (one per output_probs entry), got {1}'.format(
                output_pmf.alphabet_size, test_channel.input_size))
        if test_channel.output_size != source.alphabet_size:
            raise locator.error('test_channel', 'rows', 'expected {0} columns (source alphabet), got {1}'.format(
                source.alphabet_size, test_channel.output_size))
        settings.update(output_pmf=output_pmf, test_channel=test_channel)
        output_size = output_pmf.alphabet_size
    elif kind == 'forward_channel':
        forward = reader.channel('forward_channel', 'rows')
        if forward.input_size != source.alphabet_size:
            raise locator.error('forward_channel', 'rows', 'expected {0} rows (source alphabet), got {1}'.format(
                source.alphabet_size, forward.input_size))
        settings.update(forward_channel=forward)
        output_size = forward.output_size
    else:
        settings.update(target_distortion=reader.number('rate_distortion', 'target_distortion'))
        if reader.has('rate_distortion', 'tol'):
            settings.update(rd_tol=reader.number('rate_distortion', 'tol'))
            if not settings['rd_tol'] > 0:
                raise locator.error('rate_distortion', 'tol', 'must be positive')
        output_size = None

    distortion, hamming = _parse_distortion(reader, source.alphabet_size, output_size)
    settings.update(distortion=distortion, hamming=hamming)

    if not reader.has('experiment'):
        raise locator.error('experiment', None, 'missing required section')
    settings.update(_parse_experiment(reader))

    if reader.has('rd_curve'):
        settings.update(_parse_rd_curve(reader))

    config = ExperimentConfig(source=source, path=path, **settings)
    if kind == 'rate_distortion':
        _check_target(config, locator)
    return config


def _parse_experiment(reader):
    locator = reader.locator
    settings = {
        'n_list': reader.numbers('experiment', 'n_list', int),
        'rate_list': reader.numbers('experiment', 'rate_list')
    }
    if any(n < 1 for n in settings['n_list']):
        raise locator.error('experiment', 'n_list', 'blocklengths must be at least 1')
    if any(not rate >= 0 for rate in settings['rate_list']):
        raise locator.error('experiment', 'rate_list', 'rates must be nonnegative')

    if reader.has('experiment', 'trials'):
        settings['trials'] = reader.number('experiment', 'trials', int)
        if settings['trials'] < 1:
            raise locator.error('experiment', 'trials', 'must be at least 1')
    if reader.has('experiment', 'master_seed'):
        settings['master_seed'] = reader.number('experiment', 'master_seed', int)
        if not 0 <= settings['master_seed'] <= MASK_64:
            raise locator.error('experiment', 'master_seed', 'must be an unsigned 64-bit integer')
    if reader.has('experiment', 'output'):
        settings['output'] = reader.raw('experiment', 'output').strip() or None
    return settings


def _parse_rd_curve(reader):
    locator = reader.locator
    has_slopes = reader.has('rd_curve', 'slopes')
    has_distortions = reader.has('rd_curve', 'distortions')
    if has_slopes and has_distortions:
        raise locator.error('rd_curve', 'distortions', 'give either slopes or distortions, not both')
    if has_slopes:
        slopes = reader.numbers('rd_curve', 'slopes')
        if any(not slope >= 0 for slope in slopes):
            raise locator.error('rd_curve', 'slopes', 'slopes must be nonnegative')
        return {'rd_slopes': slopes}
    if has_distortions:
        return {'rd_distortions': reader.numbers('rd_curve', 'distortions')}
    return {}


def _check_target(config, locator):
    d_min = float(config.source.probs @ config.distortion.table.min(axis=1))
    if config.target_distortion < d_min:
        raise locator.error('rate_distortion', 'target_distortion',
                            '{0!r} is below the minimal achievable distortion {1!r}'.format(
                                config.target_distortion, d_min))


def load_config(config_file, seed=None, trials=None):
    """
    Load configuration from file and apply command line overrides

    :param config_file: Path to config file
    :param seed: Master seed overriding the configured one
    :param trials: Trials overriding the configured number
    :return: The validated configuration
    :rtype: ExperimentConfig
    """
    if not config_file:
        raise ConfigError('No configuration file given. Use --config PATH')
    if not os.path.exists(config_file):
        raise ConfigError('Configuration file {0} not found'.format(config_file))

    with open(config_file, 'r') as infile:
        config = parse_config(infile.read(), config_file)

    overrides = {}
    if seed is not None:
        overrides['master_seed'] = seed
    if trials is not None:
        overrides['trials'] = trials
    return replace(config, **overrides) if overrides else config


def dump_config(config):
    """
    Serialize a configuration to text that parses back to an equal configuration

    :param config: The configuration
    :type config: ExperimentConfig
    :return: INI-style text
    :rtype: String
    """
    lines = ['[source]', 'probs = {0}'.format(format_number_list(config.source.probs)), '']

    if config.channel_kind == 'test_channel':
        lines += ['[test_channel]',
                  'output_probs = {0}'.format(format_number_list(config.output_pmf.probs)),
                  'rows ={0}'.format(format_table(config.test_channel.matrix)), '']
    elif config.channel_kind == 'forward_channel':
        lines += ['[forward_channel]', 'rows ={0}'.format(format_table(config.forward_channel.matrix)), '']
    else:
        lines += ['[rate_distortion]',
                  'target_distortion = {0!r}'.format(float(config.target_distortion)),
                  'tol = {0!r}'.format(float(config.rd_tol)), '']

    if config.hamming:
        lines += ['[distortion]', 'measure = hamming', '']
    else:
        lines += ['[distortion]', 'measure = table', 'table ={0}'.format(format_table(config.distortion.table)), '']

    lines += ['[experiment]',
              'n_list = {0}'.format(format_number_list(config.n_list)),
              'rate_list = {0}'.format(format_number_list([float(rate) for rate in config.rate_list])),
              'master_seed = {0}'.format(config.master_seed)]
    if config.trials is not None:
        lines.append('trials = {0}'.format(config.trials))
    if config.output:
        lines.append('output = {0}'.format(config.output))
    lines.append('')

    if config.rd_slopes is not None:
        lines += ['[rd_curve]', 'slopes = {0}'.format(format_number_list([float(s) for s in config.rd_slopes])), '']
    elif config.rd_distortions is not None:
        lines += ['[rd_curve]',
                  'distortions = {0}'.format(format_number_list([float(d) for d in config.rd_distortions])), '']

    return '\n'.join(lines)


def resolve_setup(config):
    """
    Resolve the configured channel specification into P_Y and the test channel P_{X|Y}

    :param config: The configuration
    :type config: ExperimentConfig
    :rtype: Setup
    """
    if config.channel_kind == 'test_channel':
        output_pmf, test_channel = config.output_pmf, config.test_channel
        induced = output_pmf.probs @ test_channel.matrix
        gap = float(np.abs(induced - config.source.probs).max())
        if gap > MARGINAL_TOL:
            log.warning('Test channel output marginal differs from the source by %g; '
                        'soft covering is measured against the configured source', gap)
    elif config.channel_kind == 'forward_channel':
        output_pmf, test_channel = reverse_channel(joint_from(config.source, config.forward_channel))
    else:
        try:
            point = rd_point_at_distortion(config.source, config.distortion, config.target_distortion,
                                           tol=config.rd_tol)
        except ValidationError as error:
            raise ConfigError('{0}: [rate_distortion] target_distortion: {1}'.format(config.path, error))
        log.debug('Target distortion %g reached at slope %g: D=%g, R=%g bits',
                  config.target_distortion, point.slope, point.distortion, point.rate)
        output_pmf, test_channel = reverse_channel(joint_from(config.source, point.channel))

    return Setup(source=config.source, output_pmf=output_pmf, test_channel=test_channel,
                 distortion=config.distortion)
