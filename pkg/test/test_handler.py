import os
import tempfile

import pycodestyle
import pytest

from tedual import storage
from tedual.checks import CheckBase, VerifyContext
from tedual.config import CommandConfig
from tedual.disk import MediumConfig
from tedual.handler import CheckState, Report
from tedual.main import TEDual
from tedual.reporters import TableWriter
from tedual.storage import ConfigError, RunConfig, YamlConfigStorage
from tedual.worker import run_checks, run_parallel, worker_count

here = os.path.dirname(os.path.abspath(__file__))


def data(filename):
    return os.path.join(here, 'data', filename)


def test_required_classattrs_in_subclasses():
    for registry in (CheckBase, TableWriter):
        for kind, subclass in registry.__subclasses__.items():
            assert subclass.__kind__ == kind
            assert subclass.__doc__


def test_registered_checks():
    assert sorted(CheckBase.__subclasses__) == ['accumulation', 'cayley', 'circle', 'unitarity', 'wronskian']
    assert sorted(TableWriter.__subclasses__) == ['detected', 'phases', 'profile', 'roots', 'star']


def test_load_config_yaml():
    config = YamlConfigStorage(data('tedual.yaml'))
    assert config.config == storage.DEFAULT_CONFIG


def test_defaults_build_run_config():
    run_config = YamlConfigStorage.defaults().run_config()
    assert run_config.medium == MediumConfig(n=2.0, R=1.0, rho=0.0)
    assert run_config.k_window == (1.0, 5.5)
    assert run_config.effective_match_tol == pytest.approx(2 * 4.5 / 4499)


def test_save_load_run_config():
    run_config = YamlConfigStorage(data('small.yaml')).run_config({'rho': 0.5, 'match_tol': 1e-3})
    with tempfile.TemporaryDirectory() as tmp:
        filename = os.path.join(tmp, 'tedual.yaml')
        YamlConfigStorage.from_run_config(filename, run_config).save()
        again = YamlConfigStorage(filename).run_config()
    assert again == run_config
    assert again.effective_match_tol == 1e-3


@pytest.mark.parametrize('filename', ['invalid.yaml', 'unknown_key.yaml', 'missing.yaml'])
def test_bad_config_files(filename):
    with pytest.raises(ConfigError):
        YamlConfigStorage(data(filename)).run_config()


@pytest.mark.parametrize('overrides', [
    {'k_lo': 3.0},
    {'n_points': 1},
    {'n_r': 200},
    {'m_max': 401},
    {'detection_band': 2.0},
    {'refine': 'yes'},
    {'ladder': []},
    {'R': 'one'},
    {'diff_tool': 'diff'},
])
def test_invalid_overrides(overrides):
    with pytest.raises(ConfigError):
        YamlConfigStorage(data('small.yaml')).run_config(overrides)


def test_config_error_names_the_key():
    with pytest.raises(ConfigError) as info:
        RunConfig.from_dict({'n_points': 2.5})
    assert info.value.key == 'n_points'
    assert str(info.value).startswith('n_points: ')


def test_exponent_floats_in_config(tmpdir):
    filename = str(tmpdir.join('tedual.yaml'))
    with open(filename, 'w') as fp:
        fp.write('scan_step: 1e-3\nverify_tolerance: 1e-10\nrho: -2E+0\nn_points: 3e2\n')
    run_config = YamlConfigStorage(filename).run_config()
    assert run_config.scan_step == 1e-3
    assert run_config.verify_tolerance == 1e-10
    assert run_config.medium.rho == -2.0
    assert run_config.n_points == 300


def test_command_line_overrides():
    with tempfile.TemporaryDirectory() as tmp:
        config = CommandConfig(['detect', '--n', '3', '--refine', '--ladder', '0.1', '0.2', '--out', 'results'],
                               config_dir=tmp)
    assert config.command == 'detect'
    assert config.config is None
    assert config.overrides() == {'n': 3.0, 'refine': True, 'ladder': [0.1, 0.2], 'output_path': 'results'}


def test_worker_count(monkeypatch):
    monkeypatch.setenv('TEDUAL_WORKERS', '3')
    assert worker_count() == 3
    assert worker_count(2) == 2
    with pytest.raises(ValueError):
        worker_count(0)
    monkeypatch.setenv('TEDUAL_WORKERS', 'many')
    with pytest.raises(ValueError):
        worker_count()


def test_run_parallel_keeps_order():
    assert list(run_parallel(lambda x: x * x, range(20), workers=4)) == [x * x for x in range(20)]


def test_run_parallel_reraises():
    def explode(x):
        if x == 3:
            raise ArithmeticError(x)
        return x

    with pytest.raises(ArithmeticError):
        list(run_parallel(explode, range(8), workers=2))


class BrokenCheck(object):
    __kind__ = 'broken'

    def __init__(self, context):
        self.context = context

    def evaluate(self):
        raise ArithmeticError('no digits left')


def small_context(tolerance=1e-10):
    roots = []
    return VerifyContext(MediumConfig(n=2.0, R=1.0, rho=0.0), 2.6, 2.8, 3, 60, tolerance, roots)


def test_check_state_captures_exceptions():
    report = Report()
    run_checks(report, [BrokenCheck(small_context())], workers=1)
    state, = report.check_states
    assert state.verb == 'error'
    assert isinstance(state.exception, ArithmeticError)
    assert 'no digits left' in state.traceback
    assert not report.ok


def test_checks_pass_on_small_grid(capsys):
    report = Report()
    run_checks(report, CheckBase.all_checks(small_context()), workers=2)
    assert [state.check.__kind__ for state in report.check_states] == sorted(CheckBase.__subclasses__)
    assert all(state.verb == 'passed' for state in report.check_states), [
        (state.check.__kind__, state.worst) for state in report.check_states]
    assert report.finish()
    out = capsys.readouterr().out
    assert 'PASSED: wronskian' in out
    assert 'ran 5 checks' in out


def test_checks_fail_below_rounding():
    state = CheckState(CheckBase.__subclasses__['unitarity'](small_context(tolerance=1e-300))).process()
    assert state.exception is None
    assert not state.passed
    assert state.worst > 1e-300


def test_verify_through_app():
    config = CommandConfig(['verify', '--config', data('small.yaml'), '--verify-points', '4', '--workers', '1'],
                           config_dir=here)
    app = TEDual(config, YamlConfigStorage(config.config))
    report = app.verify()
    assert len(report.check_states) == 5
    assert report.ok


def test_pep8_conformance():
    """Test that we conform to PEP-8."""
    style = pycodestyle.StyleGuide(ignore=['E501', 'E402', 'W503', 'W504'])

    root = os.path.dirname(here)
    py_files = [os.path.join(dirpath, filename)
                for top in (os.path.join(root, 'lib'), here)
                for dirpath, _, filenames in os.walk(top)
                for filename in filenames if filename.endswith('.py')]
    py_files.append(os.path.join(root, 'setup.py'))
    py_files.append(os.path.join(root, 'tedual'))
    result = style.check_files(py_files)
    assert result.total_errors == 0, "Found #{0} code style errors".format(result.total_errors)
