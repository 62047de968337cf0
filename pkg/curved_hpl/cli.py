#-*- coding: utf-8 -*-

"""The curved-hpl command line.

Every command reads and writes bundles (see `curved_hpl.bundle`). The exit
status is 0 when every check passes, 1 on a verification failure and 2 on
an input error.
"""

import functools
import sys
from typing import Dict, List, Optional

import click

from curved_hpl import (
    __version__, bundle_errors, complex_errors, config_errors, graded_errors,
    homotopy_errors, perturb_errors, scalar_errors, utils)
from curved_hpl.bundle import Bundle
from curved_hpl.complex import Cone, twist
from curved_hpl.config import Settings
from curved_hpl.elimination import minimal_reduction
from curved_hpl.filtered import IdealSpec, Poset
from curved_hpl.generate import Generator
from curved_hpl.graded import GradedMap
from curved_hpl.homology import homology_ranks
from curved_hpl.homotopy import (
    SHEData, ZHEData, promote_he_to_she, specialize_she, validate_he, validate_she, validate_zhe)
from curved_hpl.perturb import (
    curved_perturb, markl_perturb, perturb_zhe, poset_reduce, simple_perturb, total_equivalence,
    verify_transfer)
from curved_hpl.report import Report
from curved_hpl.scalar import Scalar

EXIT_FAILURE = 1
EXIT_INPUT = 2

IDEALS = {'poset': ('triangular',), 'curved': ('adic', 'sum')}

def _errors(*modules) -> tuple:
    return tuple(obj for module in modules for obj in vars(module).values()
                 if isinstance(obj, type) and issubclass(obj, Exception))

INPUT_ERRORS = _errors(
    bundle_errors, complex_errors, config_errors, graded_errors, homotopy_errors,
    perturb_errors, scalar_errors) + (ValueError, OSError)


def guarded(command):
    "Input errors exit with status 2"
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except INPUT_ERRORS as exc:
            utils.error(str(exc), EXIT_INPUT)
    return wrapper

def _settings() -> Settings:
    return click.get_current_context().obj

def _finish(bundle: Bundle, reports: List[Report], out: Optional[str]):
    for report in reports:
        click.echo(str(report))
    if out:
        bundle.dump(out)
    if not all(report.ok for report in reports):
        sys.exit(EXIT_FAILURE)

def _ideal(kind: str, alpha: GradedMap) -> Optional[IdealSpec]:
    # the poset of the triangular ideals is the order of the summands of α
    if kind == 'none':
        return None
    if kind == 'adic':
        return IdealSpec.adic()
    labels = list(alpha.source.labels)
    if not labels:
        raise perturb_errors.PosetError('the perturbation has no decomposition')
    return IdealSpec(kind, Poset.chain(labels))

def _homology_check(report: Report, name: str, before: Dict[int, int], after: Dict[int, int]):
    if before == after:
        report.add(name, None)
    else:
        report.fail(name, f'{before} != {after}')


@click.group()
@click.option('--config', default=None, help='Configuration file name in CURVED_HPL_CONF_DIR')
@click.option('--z-order', type=click.IntRange(min=1), default=None, help='Truncation order Nz')
@click.option('--eps-order', type=click.IntRange(min=1), default=None, help='Truncation order Nε')
@click.option('--cap', type=click.IntRange(min=1), default=None, help='Neumann safety cap')
@click.option('-v', '--verbose', is_flag=True, help='Debug logging')
@click.version_option(version=__version__)
@click.pass_context
def main(ctx, config, z_order, eps_order, cap, verbose):
    """Exact curved homological perturbation.

    Bundles of complexes, maps and homotopy equivalence data are generated,
    perturbed, reduced and verified.
    """
    utils.setup_logging(verbose)
    try:
        settings = Settings.load(config)
    except (config_errors.MissingConfigFile, config_errors.MalformedConfigFile) as exc:
        utils.error(str(exc), EXIT_INPUT)
    ctx.obj = settings.override(z_order=z_order, eps_order=eps_order, cap=cap)


@main.command()
@click.option('--kind', type=click.Choice(['complex', 'he', 'poset', 'curved']), default='he')
@click.option('--seed', type=int, default=0, show_default=True)
@click.option('--size', type=click.IntRange(min=1), default=3, help='Number of poset elements')
@click.option('--chain', is_flag=True, help='Totally ordered poset')
@click.option('--ideal', type=click.Choice(['adic', 'triangular', 'sum']), default=None,
              help='Ideal of the perturbation: triangular for poset, adic or sum for curved')
@click.option('--out', type=click.Path(dir_okay=False), default=None, help='Output bundle (stdout otherwise)')
@guarded
def generate(kind, seed, size, chain, ideal, out):
    """Deterministic random instances.

    complex: X. he: X ≃ Y as E. poset: the filtered complex P with the
    equivalences P.<label>.he, the total complex P.total, its equivalence
    P.total.he and the perturbation P.alpha. curved: the strong equivalence E
    between X.she and Y.she and the curved perturbation alpha of X.

    The perturbation of a poset instance is strictly lower triangular. The
    curved one lies in (z, ε) with --ideal adic, in (z, ε) plus a triangular
    part otherwise.
    """
    if ideal is not None and ideal not in IDEALS.get(kind, ()):
        raise click.UsageError(f'no {kind} instance in the {ideal} ideal')
    settings = _settings()
    gen = Generator(seed, settings.context, settings.max_rank, settings.max_span,
                    settings.she_eps_order)
    bundle = Bundle(out or '<stdout>')
    if kind == 'complex':
        bundle.add_complex('X', gen.plain_complex())
    elif kind == 'he':
        data = gen.homotopy_equivalence()
        bundle.add_complex('X', data.source)
        bundle.add_complex('Y', data.target)
        bundle.add_equivalence('E', data, 'X', 'Y')
    elif kind == 'poset':
        instance = gen.filtered_instance(size, chain)
        bundle.add_filtered('P', instance.fcomplex)
        for label, data in instance.equivalences.items():
            bundle.add_complex(f'P.{label}.reduced', data.target)
            bundle.add_equivalence(f'P.{label}.he', data, f'P.{label}', f'P.{label}.reduced')
        total = total_equivalence(instance.fcomplex, instance.equivalences)
        bundle.add_complex('P.total', total.source)
        bundle.add_complex('P.total.reduced', total.target)
        bundle.add_equivalence('P.total.he', total, 'P.total', 'P.total.reduced')
        bundle.add_map('P.alpha', instance.fcomplex.alpha, 'P.total', 'P.total')
    else:
        instance = gen.curved_instance(ideal=ideal or 'sum')
        she = instance.she
        bundle.add_complex('X.she', she.source)
        bundle.add_complex('Y.she', she.target)
        bundle.add_equivalence('E', she, 'X.she', 'Y.she')
        bundle.add_complex('X', she.source.with_context(settings.context))
        bundle.add_map('alpha', instance.alpha, 'X', 'X')
    if out:
        bundle.dump(out)
    else:
        click.echo(bundle.to_json(), nl=False)


def _verify_object(bundle: Bundle, name: str) -> Optional[Report]:
    kind = bundle.kind(name)
    try:
        if kind == 'complex':
            bundle.complex(name)
            report = Report(f'complex {name}')
            report.add('δ² = w·id', None)
            return report
        if kind == 'filtered':
            bundle.filtered(name)
            report = Report(f'filtered complex {name}')
            report.add('α strictly lower triangular', None)
            report.add('(δ+α)² = w·id', None)
            return report
        if kind in ('he', 'zhe', 'she'):
            data = bundle.equivalence(name)
            validator = {'he': validate_he, 'zhe': validate_zhe, 'she': validate_she}[kind]
            report = validator(data)
            report.title = f'{report.title} {name}'
            return report
        if kind == 'transfer':
            report = verify_transfer(bundle.transfer(name))
            report.title = f'{report.title} {name}'
            return report
    except complex_errors.MaurerCartanError as exc:
        report = Report(f'{kind} {name}')
        report.add('Maurer-Cartan equation', exc.residual)
        return report
    except perturb_errors.TriangularityError as exc:
        report = Report(f'{kind} {name}')
        report.fail('α strictly lower triangular', str(exc))
        return report
    return None

@main.command()
@click.option('--in', 'in_', type=click.Path(exists=True, dir_okay=False), required=True)
@click.option('--out', type=click.Path(dir_okay=False), default=None,
              help='Bundle with the reports added')
@click.option('--name', multiple=True, help='Objects to verify (all by default)')
@guarded
def verify(in_, out, name):
    "Checks every equation of the objects of a bundle"
    bundle = Bundle.load(in_)
    reports = []
    for obj in name or bundle.names():
        report = _verify_object(bundle, obj)
        if report is None:
            if name:
                utils.warning(f'{obj} is a {bundle.kind(obj)}: nothing to verify')
            continue
        bundle.add_report(obj, report)
        reports.append(report)
    _finish(bundle, reports, out)


@main.command(name='twist')
@click.option('--in', 'in_', type=click.Path(exists=True, dir_okay=False), required=True)
@click.option('--out', type=click.Path(dir_okay=False), default=None)
@click.option('--complex', 'cplx', required=True, help='The complex X')
@click.option('--alpha', required=True, help='The degree 1 map α of X')
@click.option('--curvature-z', type=int, default=0, help='c: the new curvature is w + c·z')
@click.option('--name', default='twisted', show_default=True)
@guarded
def twist_command(in_, out, cplx, alpha, curvature_z, name):
    "tw_α(X), checking the Maurer-Cartan equation"
    bundle = Bundle.load(in_)
    source = bundle.complex(cplx)
    amap = bundle.map(alpha)
    report = Report(f'twist {name}')
    curvature = source.curvature + Scalar.z(source.context) * curvature_z
    try:
        bundle.add_complex(name, twist(source, amap, curvature))
        report.add('(δ+α)² = w·id', None)
    except complex_errors.MaurerCartanError as exc:
        report.add('(δ+α)² = w·id', exc.residual)
    _finish(bundle, [report], out)


@main.command(name='cone')
@click.option('--in', 'in_', type=click.Path(exists=True, dir_okay=False), required=True)
@click.option('--out', type=click.Path(dir_okay=False), default=None)
@click.option('--map', 'fmap', required=True, help='A closed degree 0 map')
@click.option('--name', default='cone', show_default=True)
@guarded
def cone_command(in_, out, fmap, name):
    "The mapping cone of a closed map"
    bundle = Bundle.load(in_)
    source, target = bundle.map_complexes(fmap)
    built = Cone(bundle.map(fmap), bundle.complex(source), bundle.complex(target))
    bundle.add_complex(name, built.complex)
    report = Report(f'cone {name}')
    report.add('d(f) = 0', None)
    _finish(bundle, [report], out)


@main.command()
@click.option('--in', 'in_', type=click.Path(exists=True, dir_okay=False), required=True)
@click.option('--out', type=click.Path(dir_okay=False), default=None)
@click.option('--he', 'equivalence', required=True, help='Homotopy equivalence data')
@click.option('--she-eps-order', type=click.IntRange(min=1), default=None)
@click.option('--name', default='promoted', show_default=True)
@guarded
def promote(in_, out, equivalence, she_eps_order, name):
    "Lifts a homotopy equivalence to a strong homotopy equivalence"
    bundle = Bundle.load(in_)
    data = bundle.equivalence(equivalence)
    she = promote_he_to_she(data, she_eps_order or _settings().she_eps_order)
    bundle.add_complex(f'{name}.source', she.source)
    bundle.add_complex(f'{name}.target', she.target)
    bundle.add_equivalence(name, she, f'{name}.source', f'{name}.target')
    report = validate_she(she)
    bundle.add_report(name, report)
    _finish(bundle, [report], out)


@main.command()
@click.option('--in', 'in_', type=click.Path(exists=True, dir_okay=False), required=True)
@click.option('--out', type=click.Path(dir_okay=False), default=None)
@click.option('--mode', type=click.Choice(['simple', 'markl', 'curved', 'zhe']), required=True)
@click.option('--he', '--she', 'equivalence', required=True, help='Equivalence data')
@click.option('--alpha', required=True, help='The perturbation')
@click.option('--ideal', type=click.Choice(['none', 'adic', 'triangular', 'sum']), default='none',
              show_default=True, help='Ideal of α; the triangular ones follow the summands of α')
@click.option('--name', default='transfer', show_default=True)
@guarded
def perturb(in_, out, mode, equivalence, alpha, ideal, name):
    "Transfers a perturbation along homotopy equivalence data"
    bundle = Bundle.load(in_)
    settings = _settings()
    data = bundle.equivalence(equivalence)
    amap = bundle.map(alpha)
    spec = _ideal(ideal, amap)
    if mode == 'simple':
        transfer = simple_perturb(data, amap, spec, settings.cap)
    elif mode == 'zhe':
        if not isinstance(data, ZHEData):
            data = specialize_she(data, amap.context)
        transfer = perturb_zhe(data, amap, spec, settings.cap)
    else:
        if not isinstance(data, SHEData):
            raise ValueError(f'{equivalence!r} is not a strong homotopy equivalence')
        run = markl_perturb if mode == 'markl' else curved_perturb
        transfer = run(data, amap, ideal=spec, cap=settings.cap)
    bundle.add_complex(f'{name}.source', transfer.source)
    bundle.add_complex(f'{name}.target', transfer.target)
    bundle.add_transfer(name, transfer, f'{name}.source', f'{name}.target')
    report = verify_transfer(transfer)
    bundle.add_report(name, report)
    _finish(bundle, [report], out)


@main.command()
@click.option('--in', 'in_', type=click.Path(exists=True, dir_okay=False), required=True)
@click.option('--out', type=click.Path(dir_okay=False), default=None)
@click.option('--poset', 'filtered', default=None,
              help='Filtered complex P, reduced along the equivalences P.<label>.he')
@click.option('--complex', 'cplx', default=None, help='Plain complex reduced to its homology')
@click.option('--name', default='reduced', show_default=True)
@guarded
def reduce(in_, out, filtered, cplx, name):
    "Reduces a filtered complex or a plain complex"
    if (filtered is None) == (cplx is None):
        raise click.UsageError('exactly one of --poset and --complex is expected')
    bundle = Bundle.load(in_)
    if filtered is not None:
        fcomplex = bundle.filtered(filtered)
        equivalences = {label: bundle.equivalence(f'{filtered}.{label}.he')
                        for label in fcomplex.poset.elements}
        reduction = poset_reduce(fcomplex, equivalences, _settings().cap)
        bundle.add_filtered(name, reduction.reduced)
        bundle.add_complex(f'{name}.total.source', reduction.transfer.source)
        bundle.add_complex(f'{name}.total.target', reduction.transfer.target)
        bundle.add_transfer(f'{name}.transfer', reduction.transfer,
                            f'{name}.total.source', f'{name}.total.target')
        report = verify_transfer(reduction.transfer)
        before, after = fcomplex.twisted, reduction.reduced.twisted
    else:
        source = bundle.complex(cplx)
        data = minimal_reduction(source)
        bundle.add_complex(name, data.target)
        bundle.add_equivalence(f'{name}.he', data, cplx, name)
        report = validate_he(data)
        before, after = source, data.target
    report.title = f'reduction {name}'
    hbefore, hafter = homology_ranks(before), homology_ranks(after)
    _homology_check(report, 'homology ranks preserved', hbefore, hafter)
    bundle.add_report(name, report)
    click.echo(f'homology: {hafter}')
    _finish(bundle, [report], out)


@main.command()
@click.option('--in', 'in_', type=click.Path(exists=True, dir_okay=False), required=True)
@click.option('--complex', 'cplx', required=True, help='A complex or a filtered complex')
@guarded
def homology(in_, cplx):
    "Ranks of the homology at z = ε = 0, one 'degree rank' line per non zero group"
    bundle = Bundle.load(in_)
    if bundle.kind(cplx) == 'filtered':
        source = bundle.filtered(cplx).twisted
    else:
        source = bundle.complex(cplx)
    for degree, rank in homology_ranks(source).items():
        click.echo(f'{degree} {rank}')
