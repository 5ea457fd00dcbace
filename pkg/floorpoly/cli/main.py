""" Module wiring the floorpoly library into the `floorpoly` command line """
import argparse
import json
import logging
import sys

from typing import Optional

from .. import __version__
from ..config import DEFAULTS, ENV_NONUNIFORM_FLOOR, ENV_UNIFORM_CEILING, Settings
from ..equidist import (AlphaSpec, DistributionReport, SequenceSpec, check_unresolved, corollary_experiment, generate,
                        pilot_thresholds, report_document, write_csv, write_json)
from ..exceptions import (AlphaFormatError, DomainError, ExcessiveUnresolvedError, SizeGuardError,
                          UnresolvableFloorError, VerificationError)
from ..identity import cancellation_certificate, generate_terms
from ..lemma import STATISTICS, FracVector, bar_values, f_kl, fourier_witness
from ..tools import to_fraction_list
from .run_config import RunConfig
from .suites import SUITES, run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2
EXIT_PRECISION = 3

DEFAULT_REPORT = 'floorpoly-dist.json'


def _emit(text: str) -> None:
    sys.stdout.write(text + '\n')


def _emit_json(document: dict) -> None:
    _emit(json.dumps(document, sort_keys=True, indent=2))


def _run_config(args: argparse.Namespace, settings: Settings) -> dict:
    """ The run configuration with the precision cap actually in effect """
    run_config = RunConfig.from_namespace(args)
    run_config.precision_cap = settings.precision_cap

    return run_config.to_dict()


def cmd_expand(args: argparse.Namespace, settings: Settings) -> int:
    """ Print the identity for n factors, and with --certify the cancellation certificate """
    identity = generate_terms(args.n)
    certificate = cancellation_certificate(args.n) if args.certify else None

    if args.format == 'json':
        document = dict(n=args.n, terms=identity.rendered, identity=identity.render())
        if certificate is not None:
            document['certificate'] = certificate.to_dict()
        _emit_json(document)
    else:
        _emit(identity.render())
        if certificate is not None:
            _emit(certificate.summary())

    if certificate is not None and not certificate.holds:
        raise VerificationError(f"Expected Verification Error || the certificate for n={args.n} does not hold",
                                certificate.to_dict())

    return EXIT_OK


def cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    """ Run one exact verification suite """
    result = run_suite(args.suite, args.trials, args.seed, n=args.n, k=args.k, l=args.l)
    if args.format == 'json':
        _emit_json(result.to_dict())
    else:
        _emit(result.summary())

    return EXIT_OK


def cmd_fkl(args: argparse.Namespace, settings: Settings) -> int:
    """ Evaluate f_{k,l} at a rational point """
    try:
        y = FracVector(to_fraction_list(args.y))
    except ValueError as error:
        if isinstance(error, DomainError):
            raise
        raise DomainError(f"Expected Usage Error || {error}") from None

    value = f_kl(args.k, args.l, y)
    bars = bar_values(args.k, args.l, y) if args.k > 1 else None

    if args.format == 'json':
        _emit_json(dict(k=args.k, l=args.l, y=[str(v) for v in y], value=str(value),
                        a_bar=[str(v) for v in bars.a_bar] if bars else [],
                        b_bar=list(bars.b_bar) if bars else []))
    else:
        _emit(f'f_{{{args.k},{args.l}}}({", ".join(str(v) for v in y)}) = {value}')

    return EXIT_OK


def cmd_dist(args: argparse.Namespace, settings: Settings) -> int:
    """ Generate a sequence, measure it and write the report """
    alphas = args.alpha or []
    if not alphas:
        raise DomainError("Expected Usage Error || dist needs at least one --alpha")

    spec = SequenceSpec(args.variant, [AlphaSpec(alpha) for alpha in alphas], k=args.k, m=args.m, N=args.n,
                        precision_cap=settings.precision_cap, precision_start=settings.precision_start,
                        value_bits=settings.value_bits)
    sequence = generate(spec, jobs=settings.jobs)
    check_unresolved(sequence, settings.max_unresolved_fraction)

    report = DistributionReport(sequence, settings.weyl_harmonics, settings.histogram_bins, label=args.variant)
    verdict = report.verdict(settings.uniform_ceiling, settings.nonuniform_floor)
    body = report.to_dict()
    body['verdict'] = verdict
    document = report_document(body, _run_config(args, settings))

    if args.output:
        if args.format == 'csv':
            write_csv(sequence, args.output)
        else:
            write_json(document, args.output)
    elif args.format == 'json':
        _emit_json(document)
    else:
        if args.format == 'csv':
            for value in sequence.values:
                _emit(f'{value:.17g}')
        write_json(document, DEFAULT_REPORT)
        logger.info('report written to %s', DEFAULT_REPORT)

    _emit(f'{spec.variant} {" ".join(alphas)} k={spec.k} N={spec.N}: D*={report.star_discrepancy} -> {verdict}')

    return EXIT_OK


def cmd_corollary(args: argparse.Namespace, settings: Settings) -> int:
    """ Run the two-scale uniformity experiment for (alpha n)^{:k} and the theorem combination """
    result = corollary_experiment(AlphaSpec(args.alpha), args.k, N=args.n, m=args.m,
                                  precision_cap=settings.precision_cap, jobs=settings.jobs,
                                  uniform_ceiling=settings.uniform_ceiling,
                                  nonuniform_floor=settings.nonuniform_floor,
                                  max_unresolved_fraction=settings.max_unresolved_fraction)
    document = report_document(result.to_dict(), _run_config(args, settings))

    if args.output:
        write_json(document, args.output)
    elif args.format == 'json':
        _emit_json(document)

    _emit(result.summary())

    return EXIT_OK


def cmd_pilot(args: argparse.Namespace, settings: Settings) -> int:
    """ Measure the reference sequences at N and N/10 and derive the verdict thresholds from them """
    result = pilot_thresholds(N=args.n, margin=args.margin or settings.pilot_margin,
                              precision_cap=settings.precision_cap, jobs=settings.jobs,
                              max_unresolved_fraction=settings.max_unresolved_fraction)
    document = report_document(result.to_dict(), _run_config(args, settings))

    if args.output:
        write_json(document, args.output)
    elif args.format == 'json':
        _emit_json(document)

    if args.format == 'text':
        _emit(result.summary())

    if not result.separated:
        raise VerificationError(f"Expected Verification Error || the pilot at N={args.n} does not separate "
                                f"uniform from nonuniform references", result.to_dict())

    logger.info('apply with %s=%.6f %s=%.6f', ENV_UNIFORM_CEILING, result.uniform_ceiling, ENV_NONUNIFORM_FLOOR,
                result.nonuniform_floor)

    return EXIT_OK


def cmd_witness(args: argparse.Namespace, settings: Settings) -> int:
    """ Monte Carlo estimate of |E exp(2 pi i g_k)| with its 3 sigma radius """
    estimate = fourier_witness(args.k, args.m, args.samples, args.seed, statistic=args.statistic,
                               shard=settings.witness_shard, jobs=settings.jobs)
    if args.format == 'json':
        _emit_json(dict(run_config=_run_config(args, settings), witness=estimate.to_dict()))
    else:
        verdict = 'nonuniform' if estimate.witnesses_nonuniformity else 'no witness'
        _emit(f'{args.statistic} k={args.k} m={args.m} samples={args.samples} seed={args.seed}: '
              f'{estimate.estimate:.6f} +- {estimate.radius:.6f} -> {verdict}')

    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """ The argument parser with one sub-command per experiment """
    parser = argparse.ArgumentParser(prog='floorpoly', description='Nested floor identities and experiments')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='more log output on stderr')
    parser.add_argument('-q', '--quiet', action='store_true', help='only errors on stderr')
    commands = parser.add_subparsers(dest='command', required=True)

    expand = commands.add_parser('expand', help='print the product identity for n factors')
    expand.add_argument('n', type=int)
    expand.add_argument('--certify', action='store_true', help='also run the cancellation certificate (n <= 9)')
    expand.add_argument('--format', choices=('text', 'json'), default='text')
    expand.set_defaults(handler=cmd_expand)

    verify = commands.add_parser('verify', help='run an exact verification suite')
    verify.add_argument('suite', choices=SUITES)
    verify.add_argument('--n', type=int)
    verify.add_argument('--k', type=int)
    verify.add_argument('--l', type=int)
    verify.add_argument('--trials', type=int, default=100)
    verify.add_argument('--seed', type=int, default=0)
    verify.add_argument('--format', choices=('text', 'json'), default='text')
    verify.set_defaults(handler=cmd_verify)

    fkl = commands.add_parser('fkl', help='evaluate f_{k,l} at a point')
    fkl.add_argument('--k', type=int, required=True)
    fkl.add_argument('--l', type=int, required=True)
    fkl.add_argument('--y', default='', help='comma separated rationals y_1,...,y_{k-1}')
    fkl.add_argument('--format', choices=('text', 'json'), default='text')
    fkl.set_defaults(handler=cmd_fkl)

    dist = commands.add_parser('dist', help='measure the distribution of a sequence mod 1')
    dist.add_argument('--variant', choices=SequenceSpec.VARIANTS, default=SequenceSpec.POWER_CHAIN)
    dist.add_argument('--alpha', action='append', help='rat:p/q, root:b,d or pi; repeat for several alphas')
    dist.add_argument('--k', type=int, default=1)
    dist.add_argument('--m', type=int, default=1)
    dist.add_argument('--n', type=int, default=DEFAULTS.ci_points)
    _add_run_arguments(dist, ('json', 'csv', 'text'))
    dist.set_defaults(handler=cmd_dist)

    corollary = commands.add_parser('corollary', help='two-scale uniformity experiment for (alpha n)^{:k}')
    corollary.add_argument('--alpha', required=True)
    corollary.add_argument('--k', type=int, required=True)
    corollary.add_argument('--m', type=int, default=1)
    corollary.add_argument('--n', type=int, default=DEFAULTS.ci_points)
    _add_run_arguments(corollary, ('json', 'text'))
    corollary.set_defaults(handler=cmd_corollary)

    pilot = commands.add_parser('pilot', help='derive the verdict thresholds from reference runs')
    pilot.add_argument('--n', type=int, default=DEFAULTS.ci_points, help='full size; anchors at N and N/10')
    pilot.add_argument('--margin', type=float, help=f'anchor to threshold factor, {DEFAULTS.pilot_margin} by default')
    _add_run_arguments(pilot, ('json', 'text'))
    pilot.set_defaults(handler=cmd_pilot)

    witness = commands.add_parser('witness', help='Monte Carlo nonuniformity witness for g_k mod 1')
    witness.add_argument('--k', type=int, required=True)
    witness.add_argument('--m', type=int, default=1)
    witness.add_argument('--samples', type=int, default=1_000_000)
    witness.add_argument('--seed', type=int, default=0)
    witness.add_argument('--statistic', choices=STATISTICS, default='g')
    witness.add_argument('--jobs', type=int)
    witness.add_argument('--format', choices=('text', 'json'), default='text')
    witness.set_defaults(handler=cmd_witness)

    return parser


def _add_run_arguments(parser: argparse.ArgumentParser, formats: tuple[str, ...]) -> None:
    parser.add_argument('--precision-cap', type=int)
    parser.add_argument('--jobs', type=int)
    parser.add_argument('--seed', type=int, default=0, help='recorded in the report')
    parser.add_argument('--output', help=f'report path; dist falls back to {DEFAULT_REPORT} unless --format json')
    parser.add_argument('--format', choices=formats, default='text')


def configure_logging(verbose: int, quiet: bool, settings: Settings) -> None:
    """ Send log records to stderr at the level chosen by the flags, or by FLOORPOLY_LOG_LEVEL """
    if quiet:
        level = logging.ERROR
    elif verbose:
        level = logging.DEBUG if verbose > 1 else logging.INFO
    else:
        level = getattr(logging, settings.log_level, logging.WARNING)

    logging.basicConfig(stream=sys.stderr, level=level, format='%(levelname)s %(name)s: %(message)s')


def main(argv: Optional[list[str]] = None) -> int:
    """
    Entry point of the command line

    Args:
        argv (Optional[list[str]]): Arguments without the program name, sys.argv[1:] when omitted

    Returns:
        int: 0 on success, 1 on a verification failure, 2 on a usage or domain error, 3 on a precision failure

    """
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        settings = Settings.from_env().with_overrides(precision_cap=getattr(args, 'precision_cap', None),
                                                      jobs=getattr(args, 'jobs', None))
    except ValueError as error:
        sys.stderr.write(f'floorpoly: {error}\n')
        return EXIT_USAGE

    configure_logging(args.verbose, args.quiet, settings)

    try:
        return args.handler(args, settings)
    except VerificationError as error:
        logger.error('%s (counterexample: %s)', error, error.counterexample)
        return EXIT_VERIFICATION
    except (SizeGuardError, DomainError, AlphaFormatError) as error:
        logger.error('%s', error)
        return EXIT_USAGE
    except (UnresolvableFloorError, ExcessiveUnresolvedError) as error:
        logger.error('%s', error)
        return EXIT_PRECISION
