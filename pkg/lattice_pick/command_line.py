import logging
import sys

import click
from tabulate import tabulate

from lattice_pick import flags
from lattice_pick.config.system import write_file_contents
from lattice_pick.config.utils import read_lattice_pick_config, resolve_option, resolve_workers
from lattice_pick.counting import classify_chart_points
from lattice_pick.errors import DegenerateBasis, LatticePickError
from lattice_pick.exact import det3
from lattice_pick.experiments import constant_survey, pick_report, reeve_report, worked_example
from lattice_pick.files import (
    PolygonFile, dumps_report, make_report, pick_report_body, polygon_file_document, read_polygon_file,
    reeve_body, survey_body, survey_csv, worked_example_body, write_polygon_file,
)
from lattice_pick.generation import random_simple_polygon
from lattice_pick.logs import configure_logging, log_error, log_status, log_survey_status, log_warning
from lattice_pick.plane import (
    basis_change_determinant, is_lattice_basis, kernel_basis, orthogonal_basis, paper_basis,
    parallelogram_area, primitive_normal, sublattice_index,
)
from lattice_pick.polygon import lattice_chart, polygon_from_vertices
from lattice_pick.templating import render
from lattice_pick.utils import parse_normal, parse_r_range

logger = logging.getLogger(__name__)


class LatticePickGroup(click.Group):
    """Maps failures onto exit codes: 1 input or usage error, 2 degenerate domain case, 3 failed self-check."""

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            rv = super().main(args=args, prog_name=prog_name, complete_var=complete_var,
                              standalone_mode=False, **extra)
        except click.ClickException as e:
            e.show()
            sys.exit(1)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(1)
        except LatticePickError as e:
            log_error(e)
            sys.exit(e.exit_code)
        sys.exit(rv if isinstance(rv, int) else 0)


def add_options(options):
    def _add_options(func):
        for option in reversed(options):
            func = option(func)
        return func
    return _add_options


def emit(text: str, out: str = None):
    if out:
        write_file_contents(out, text)
    else:
        click.echo(text, nl=False)


normal_option = click.option(
    '--normal',
    required=True,
    type=click.STRING,
    help="""
        Normal vector of the plane ax + by + cz = 0 as a,b,c.
        It is reduced to the primitive, canonically oriented normal.
    """
)
out_option = click.option(
    '--out',
    type=click.Path(dir_okay=False, writable=True),
    help="Write the JSON report to this file instead of stdout"
)
workers_option = click.option(
    '--workers',
    type=click.IntRange(min=1),
    help="""
        Number of worker processes for lattice point counting.
        Defaults to the config file, then LATTICE_PICK_WORKERS, then 1
    """
)
size_option = click.option(
    '--size',
    type=click.IntRange(min=1),
    help="Bound on chart coordinates of generated vertices"
)
seed_option = click.option(
    '--seed',
    type=click.INT,
    help="Seed of the SplitMix64 generator"
)
vertices_option = click.option(
    '--vertices',
    type=click.IntRange(min=3),
    help="Number of vertices of generated polygons"
)
generator_flags = [normal_option, size_option, seed_option, vertices_option]

BASIS_HEADERS = ['basis', 'u', 'v', 'area', 'index', 'lattice basis']
SURVEY_HEADERS = ['normal', 'trials', 'empirical k', 'covolume', 'paper k', 'paper k / empirical k']


@click.group(cls=LatticePickGroup, help="lattice_pick CLI: Pick's formula in rational planes of Z^3")
@click.option('--verbose', is_flag=True, help="Log debug messages to stderr")
@click.pass_context
def main(ctx, verbose):
    configure_logging(verbose)
    ctx.obj = read_lattice_pick_config()


@main.command()
@normal_option
@out_option
@click.pass_context
def basis(ctx, normal, out):
    """Paper, orthogonal and kernel bases of a plane lattice."""
    raw = parse_normal(normal)
    n = primitive_normal(raw)
    L = kernel_basis(n)

    rows = [['kernel b1, b2', L.b1, L.b2, L.covolume, 1, True]]
    body = {
        'raw_normal': [str(c) for c in raw],
        'normal': [str(c) for c in n.as_vector()],
        'kernel_basis': {'b1': [str(c) for c in L.b1], 'b2': [str(c) for c in L.b2],
                         'covolume': L.covolume.to_dict()},
    }

    try:
        alpha, beta = paper_basis(n)
        eta1, eta2 = orthogonal_basis(n)
    except DegenerateBasis as e:
        click.echo(f"normal {raw} -> {n}")
        click.echo(tabulate(rows, headers=BASIS_HEADERS, disable_numparse=True))
        body['paper_construction'] = None
        if out:
            emit(dumps_report(make_report('basis', body['raw_normal'], body)), out)
        log_warning(f"paper construction inapplicable: {e}")
        ctx.exit(DegenerateBasis.exit_code)

    for name, (u, v) in (('paper alpha, beta', (alpha, beta)), ('orthogonal eta1, eta2', (eta1, eta2))):
        rows.append([name, u, v, parallelogram_area(u, v, n), sublattice_index(L, u, v),
                     is_lattice_basis(n, u, v)])

    det = det3(n.as_vector(), eta1, eta2)
    body['paper_construction'] = {
        'alpha': [str(c) for c in alpha],
        'beta': [str(c) for c in beta],
        'eta1': [str(c) for c in eta1],
        'eta2': [str(c) for c in eta2],
        'paper_area': parallelogram_area(alpha, beta, n).to_dict(),
        'orthogonal_area': parallelogram_area(eta1, eta2, n).to_dict(),
        'paper_index': str(sublattice_index(L, alpha, beta)),
        'orthogonal_index': str(sublattice_index(L, eta1, eta2)),
        'paper_coefficient_determinant': str(basis_change_determinant(L, alpha, beta)),
        'orthogonal_determinant': str(det),
    }

    click.echo(f"normal {raw} -> {n}")
    click.echo(tabulate(rows, headers=BASIS_HEADERS, disable_numparse=True))
    click.echo(f"det(n | eta1 | eta2) = {det} = a(a^2+b^2)(a^2+b^2+c^2)")
    if out:
        emit(dumps_report(make_report('basis', body['raw_normal'], body)), out)


@main.command()
@click.argument('polygon_file', type=click.Path(dir_okay=False))
@out_option
@workers_option
@click.pass_context
def check(ctx, polygon_file, out, workers):
    """Reconcile area, lattice counts and the constant k for one polygon."""
    workers = resolve_workers(workers, ctx.obj, flags.WORKERS)
    parsed = read_polygon_file(polygon_file)
    P = polygon_from_vertices(parsed.vertices, parsed.normal)
    report = pick_report(P, workers=workers)

    body = pick_report_body(report, raw_normal=parsed.normal)
    emit(dumps_report(make_report('check', polygon_file_document(parsed), body)), out)
    log_status(f"Checking {polygon_file}: I = {report.counts.interior}, B = {report.counts.boundary}")


@main.command()
@add_options(generator_flags)
@click.option(
    '--trials',
    type=click.IntRange(min=1),
    help="Number of random polygons to measure"
)
@click.option(
    '--csv',
    'csv_path',
    type=click.Path(dir_okay=False, writable=True),
    help="Also write one CSV row per trial to this file"
)
@out_option
@workers_option
@click.pass_context
def survey(ctx, normal, size, seed, vertices, trials, csv_path, out, workers):
    """Measure the empirical constant over seeded random polygons of one plane."""
    config = ctx.obj
    trials = resolve_option(trials, config, 'survey', 'trials')
    size = resolve_option(size, config, 'survey', 'size')
    seed = resolve_option(seed, config, 'survey', 'seed')
    vertices = resolve_option(vertices, config, 'survey', 'vertices')
    workers = resolve_workers(workers, config, flags.WORKERS)

    raw = parse_normal(normal)
    n = primitive_normal(raw)
    record = constant_survey(n, trials, size, seed, vertices=vertices, workers=workers)

    inputs = {'normal': [str(c) for c in raw], 'trials': trials, 'size': size, 'seed': seed,
              'vertices': vertices}
    emit(dumps_report(make_report('survey', inputs, survey_body(record, raw_normal=raw))), out)
    if csv_path:
        write_file_contents(csv_path, survey_csv(record))
    click.echo(tabulate(
        [[str(n), record.trials, record.common_value if record.all_equal else 'differ', record.covolume,
          record.k_paper if record.paper_applicable else 'n/a', record.paper_ratio or 'n/a']],
        headers=SURVEY_HEADERS,
        disable_numparse=True,
    ), err=True)
    if not record.paper_applicable:
        log_warning(f"paper construction inapplicable for normal {n} (a = 0)")
    log_survey_status(n, record)


@main.command()
@click.option(
    '--r',
    'r_range',
    required=True,
    type=click.STRING,
    help="Height r of the Reeve tetrahedron, a single value or an inclusive range lo..hi"
)
@out_option
def reeve(r_range, out):
    """Lattice points and volumes of Reeve tetrahedra."""
    lo, hi = parse_r_range(r_range)
    tetrahedra = [reeve_report(r) for r in range(lo, hi + 1)]

    click.echo(tabulate(
        [[t.r, t.total_lattice_points, f"{t.volume.numerator}/{t.volume.denominator}"] for t in tetrahedra],
        headers=['r', 'lattice points', 'volume'],
        disable_numparse=True,
    ))
    if out:
        emit(dumps_report(make_report('reeve', {'r': [lo, hi]}, reeve_body(tetrahedra))), out)


@main.command()
@add_options(generator_flags)
@click.option(
    '--out',
    required=True,
    type=click.Path(dir_okay=False, writable=True),
    help="Path of the polygon file to write"
)
@click.pass_context
def gen(ctx, normal, size, seed, vertices, out):
    """Write a seeded random simple polygon file."""
    config = ctx.obj
    size = resolve_option(size, config, 'generate', 'size')
    seed = resolve_option(seed, config, 'generate', 'seed')
    vertices = resolve_option(vertices, config, 'generate', 'vertices')

    n = primitive_normal(parse_normal(normal))
    P = random_simple_polygon(n, size, vertices, seed)
    polygon_file = PolygonFile(
        vertices=list(P.vertices),
        normal=n.as_vector(),
        metadata={'generator': 'lattice_pick', 'seed': str(seed), 'size': str(size),
                  'vertices': str(vertices)},
    )
    write_polygon_file(polygon_file, out)
    log_status(f"Generating {vertices}-gon in plane {n}")


@main.command('render')
@click.argument('polygon_file', type=click.Path(dir_okay=False))
@click.option(
    '--out',
    required=True,
    type=click.Path(dir_okay=False, writable=True),
    help="Path of the SVG file to write"
)
def render_command(polygon_file, out):
    """Draw a polygon with its boundary and interior lattice points as SVG."""
    parsed = read_polygon_file(polygon_file)
    P = polygon_from_vertices(parsed.vertices, parsed.normal)
    chart = lattice_chart(P)
    boundary_points, interior_points = classify_chart_points(chart.coords)

    caption = f"I = {len(interior_points)}, B = {len(boundary_points)}"
    write_file_contents(out, render.render_polygon_svg(chart.coords, boundary_points, interior_points, caption))
    log_status(f"Rendering {polygon_file} ({caption})")


@main.command()
@click.option('--interior', required=True, type=click.IntRange(min=0), help="Number of interior lattice points I")
@click.option('--boundary', required=True, type=click.IntRange(min=0), help="Number of boundary lattice points B")
@out_option
def pick(interior, boundary, out):
    """Evaluate I + B/2 - 1."""
    example = worked_example(interior, boundary)
    rows = [['pick value', str(example.pick_value)]]
    if example.text_value is not None:
        rows.append(['paper text value', example.text_value])
    click.echo(tabulate(rows, headers=[f'I = {interior}, B = {boundary}', 'value'], disable_numparse=True))
    for note in example.notes:
        click.echo(f"note: {note}")
    if out:
        emit(dumps_report(make_report('pick', {'interior': interior, 'boundary': boundary},
                                      worked_example_body(example))), out)
