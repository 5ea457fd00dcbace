""" The `floorpoly` command line. """
from .main import build_parser, configure_logging, main
from .run_config import RunConfig
from .suites import SUITES, SuiteResult, run_suite
