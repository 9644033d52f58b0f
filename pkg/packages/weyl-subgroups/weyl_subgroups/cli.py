# Copyright 2026 The weyl-subgroups Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
import logging
from collections.abc import Callable, Iterator
from contextlib import contextmanager
from typing import TextIO

import click
from dotenv import find_dotenv, load_dotenv
from pydantic import BaseModel, ValidationError

from .bijmap import j_forward, j_inverse
from .data_models.enums import Direction, LatticeKind, OutputFormat, SubgroupAction
from .data_models.schemas import BijectionDocument, GFPairDocument, IdentityDocument
from .exceptions import InternalConsistencyError, InvalidInputError, ResourceLimitError
from .finsub import completed_diagrams, enumerate_subsystems, render_diagram
from .identities import count_realization, descent_report, descent_stats, type_a_cyclic
from .rational import to_fraction
from .refsub import (
    GFPair,
    PsiXPair,
    alcove_of_gf,
    coset_reps,
    elements_of_psix,
    fundamental_gf_pair,
    index_of_gf,
    isomorphism_type,
    pointwise_stabilizer,
    roots_of_gf,
    roots_of_psix,
    volume_of_gf,
)
from .rootsys import LatticeData, RootSystem, build_root_system, lattices
from .settings import get_settings
from .utils import (
    alcove_document,
    classification_document,
    dump_document,
    elements_document,
    gf_document,
    index_document,
    parse_datum,
    parse_document,
    parse_gf,
    psix_document,
    roots_document,
    stabilizer_document,
    type_document,
    volume_document,
)
from .version import __version__

logger = logging.getLogger(__name__)

# Exit codes by error family.
EXIT_INVALID = 1
EXIT_INTERNAL = 2
EXIT_RESOURCE = 3

FORMAT_OPTION = click.option(
    "--format",
    "output_format",
    type=click.Choice([f.value for f in OutputFormat]),
    default=None,
    help="Output format; defaults to WS_OUTPUT_FORMAT.",
)
MAX_ORDER_OPTION = click.option(
    "--max-order", type=int, default=None, help="Cap on |W| enumeration; defaults to WS_MAX_WEYL_ORDER."
)


@click.group()
@click.version_option(version=__version__)
def cli() -> None:
    """Weyl subgroups CLI - root systems and reflection subgroups of affine Weyl groups."""
    # .env is looked up from the working directory, not the install location.
    load_dotenv(find_dotenv(usecwd=True))
    logging.basicConfig(level=logging.INFO)


@contextmanager
def _reported_errors(ctx: click.Context) -> Iterator[None]:
    """Writes library errors to stderr and exits with their family's code."""
    try:
        yield
    except InvalidInputError as e:
        click.echo(str(e), err=True)
        ctx.exit(EXIT_INVALID)
    except InternalConsistencyError as e:
        click.echo(str(e), err=True)
        ctx.exit(EXIT_INTERNAL)
    except ResourceLimitError as e:
        click.echo(str(e), err=True)
        ctx.exit(EXIT_RESOURCE)
    except ValidationError as e:
        click.echo(f"Invalid configuration: {e}", err=True)
        ctx.exit(EXIT_INVALID)


def _resolve_format(output_format: str | None) -> OutputFormat:
    if output_format is not None:
        return OutputFormat(output_format)
    return get_settings().output_format


def _emit(output_format: OutputFormat, document: BaseModel, table: Callable[[], list[str]]) -> None:
    if output_format == OutputFormat.JSON:
        click.echo(dump_document(document))
    else:
        click.echo("\n".join(table()))


def _lattice(rs: RootSystem, name: str) -> LatticeData:
    q_lattice, p_lattice, _ = lattices(rs)
    return p_lattice if name == "P" else q_lattice


def _as_gf(datum: GFPair | PsiXPair) -> GFPair:
    return datum if isinstance(datum, GFPair) else j_inverse(datum)


def _as_psix(datum: GFPair | PsiXPair) -> PsiXPair:
    return datum if isinstance(datum, PsiXPair) else j_forward(datum)


@cli.command()
@click.argument("cartan_type")
@FORMAT_OPTION
@MAX_ORDER_OPTION
@click.option(
    "--allow-fingerprint",
    is_flag=True,
    default=False,
    help="Fall back to type and norm fingerprints when W is too large to enumerate.",
)
@click.pass_context
def classify(
    ctx: click.Context,
    *,
    cartan_type: str,
    output_format: str | None,
    max_order: int | None,
    allow_fingerprint: bool,
) -> None:
    """List the conjugacy classes of root subsystems of CARTAN_TYPE."""
    with _reported_errors(ctx):
        rs = build_root_system(cartan_type)
        classification = enumerate_subsystems(rs, max_order, allow_fingerprint=allow_fingerprint)
        document = classification_document(classification)

        def table() -> list[str]:
            lines = [f"{'type':<16}{'roots':>6}  closed  dual-closed  maximal"]
            for c in classification.classes:
                lines.append(
                    f"{c.type_name:<16}{c.size:>6}  {c.closed!s:<6}  {c.dual_closed!s:<11}  {c.maximal!s}"
                )
            lines.append(f"{len(classification.classes)} classes")
            lines.extend(classification.notes)
            return lines

        _emit(_resolve_format(output_format), document, table)


@cli.command()
@click.argument("action", type=click.Choice([a.value for a in SubgroupAction]))
@click.argument("datum", type=click.File("r"))
@FORMAT_OPTION
@MAX_ORDER_OPTION
@click.option("--level-bound", type=int, default=None, help="Bound on |n| for listed roots α + nδ.")
@click.option(
    "--super",
    "super_datum",
    type=click.File("r"),
    default=None,
    help="GF pair of the larger subgroup for 'index'; defaults to the whole affine Weyl group.",
)
@click.option(
    "--lattice",
    "lattice_name",
    type=click.Choice(["Q", "P"]),
    default="Q",
    help="Translation lattice R for 'cosets' and 'stabilizer'.",
)
@click.option("--translation-bound", type=int, default=None, help="Coefficient bound for 'elements'.")
@click.option("--verify", is_flag=True, default=False, help="Check listed roots against the reflection closure.")
@click.pass_context
def subgroup(
    ctx: click.Context,
    *,
    action: str,
    datum: TextIO,
    output_format: str | None,
    max_order: int | None,
    level_bound: int | None,
    super_datum: TextIO | None,
    lattice_name: str,
    translation_bound: int | None,
    verify: bool,
) -> None:
    """
    Run ACTION on the reflection subgroup described by the JSON file DATUM
    (a GF pair or a (Ψ, X) pair; '-' reads stdin).
    """
    with _reported_errors(ctx):
        settings = get_settings()
        parsed = parse_datum(datum.read())
        rs = parsed.rs
        bound = settings.level_bound if level_bound is None else level_bound
        output = _resolve_format(output_format)
        match SubgroupAction(action):
            case SubgroupAction.ROOTS:
                if isinstance(parsed, GFPair):
                    roots = roots_of_gf(parsed, bound, verify=verify)
                else:
                    roots = roots_of_psix(parsed, bound)
                document = roots_document(rs, roots, bound)
                lines = [f"{len(document.roots)} roots with |level| <= {bound}"] + [
                    f"{r.root} + {r.level}δ" for r in document.roots
                ]
            case SubgroupAction.ALCOVE:
                document = alcove_document(rs, alcove_of_gf(_as_gf(parsed)))
                lines = [f"wall {w.normal} + {w.constant} >= 0" for w in document.walls]
                lines += [f"component {c.gamma}: vertices {c.vertices} rays {c.rays}" for c in document.components]
            case SubgroupAction.VOLUME:
                document = volume_document(rs, volume_of_gf(_as_gf(parsed)))
                lines = [document.volume]
            case SubgroupAction.INDEX:
                larger = fundamental_gf_pair(rs) if super_datum is None else parse_gf(
                    parse_document(super_datum.read(), GFPairDocument)
                )
                document = index_document(rs, index_of_gf(_as_gf(parsed), larger))
                lines = [str(document.index)]
            case SubgroupAction.COSETS:
                reps = coset_reps(_as_gf(parsed), _lattice(rs, lattice_name), max_order)
                document = elements_document(rs, reps)
                lines = [f"{len(reps)} coset representatives"] + [
                    f"w: {e.w}  gamma: {e.gamma}" for e in document.elements
                ]
            case SubgroupAction.ELEMENTS:
                elements = elements_of_psix(_as_psix(parsed), translation_bound, max_order)
                document = elements_document(rs, elements)
                lines = [f"{len(elements)} elements"] + [f"w: {e.w}  gamma: {e.gamma}" for e in document.elements]
            case SubgroupAction.TYPE:
                document = type_document(rs, isomorphism_type(_as_gf(parsed)))
                lines = [f"{c.kind.value} {c.type_name}" for c in document.components]
            case SubgroupAction.STABILIZER:
                stabilizer = pointwise_stabilizer(_as_psix(parsed), _lattice(rs, lattice_name))
                document = stabilizer_document(rs, stabilizer)
                lines = [f"roots: {document.simple}", f"lattice: {document.lattice}"]
        _emit(output, document, lambda: lines)


@cli.command()
@click.argument("direction", type=click.Choice([d.value for d in Direction]))
@click.argument("datum", type=click.File("r"))
@FORMAT_OPTION
@click.pass_context
def bij(ctx: click.Context, *, direction: str, datum: TextIO, output_format: str | None) -> None:
    """
    Map DATUM across the bijection: 'forward' takes a GF pair to its (Ψ, X)
    pair, 'inverse' takes a (Ψ, X) pair back, checking both inverse
    constructions against each other.
    """
    with _reported_errors(ctx):
        parsed = parse_datum(datum.read())
        if Direction(direction) == Direction.FORWARD:
            if not isinstance(parsed, GFPair):
                raise InvalidInputError("'forward' expects a GF pair.")
            gf, psix = parsed, j_forward(parsed)
        else:
            if not isinstance(parsed, PsiXPair):
                raise InvalidInputError("'inverse' expects a (Ψ, X) pair.")
            gf, psix = j_inverse(parsed), parsed
        gf_doc, psix_doc = gf_document(gf), psix_document(psix)
        document = BijectionDocument(type=gf.rs.label, direction=direction, gf=gf_doc, psix=psix_doc)
        lines = [
            f"gamma: {gf_doc.gamma}",
            f"f: {gf_doc.f}",
            f"psi: {psix_doc.psi}",
            f"a: {psix_doc.a}",
            "xprime: " + ", ".join(f"{c.kind.value}:{c.m}" for c in psix_doc.xprime),
        ]
        _emit(_resolve_format(output_format), document, lambda: lines)


@cli.command()
@click.option("--type", "cartan_type", required=True, help="Irreducible Cartan type, e.g. A2 or G2.")
@click.option(
    "--lattice",
    "lattice_name",
    type=click.Choice([LatticeKind.P.value, LatticeKind.P_DUAL.value]),
    default=LatticeKind.P.value,
    help="P for the highest root, Pdual for the highest short root.",
)
@click.option("--mmax", type=int, default=10, help="Check the identity for M = 1..mmax.")
@click.option("--realize", type=int, default=None, help="Also count realizations for m = 1..REALIZE.")
@FORMAT_OPTION
@MAX_ORDER_OPTION
@click.pass_context
def identity(
    ctx: click.Context,
    *,
    cartan_type: str,
    lattice_name: str,
    mmax: int,
    realize: int | None,
    output_format: str | None,
    max_order: int | None,
) -> None:
    """Check the descent identities of an irreducible root system."""
    with _reported_errors(ctx):
        rs = build_root_system(cartan_type)
        lattice = LatticeKind(lattice_name)
        m_values = range(1, mmax + 1)
        report = descent_report(descent_stats(rs, lattice, max_order), m_values)
        cyclic = None
        family, rank = rs.cartan_type.components[0]
        if family == "A" and rank <= get_settings().max_cyclic_rank:
            cyclic = type_a_cyclic(rank, m_values, rs=rs)
        realization = [count_realization(rs, lattice, m, max_order) for m in range(1, (realize or 0) + 1)]
        document = IdentityDocument(type=rs.label, descent=report, cyclic=cyclic, realization=realization)

        def table() -> list[str]:
            lines = [f"d = {report.d}  (h = {report.h}, f = {report.f_phi})"]
            lines += [
                f"M={c.m:<4} lhs={to_fraction(c.lhs)!s:<12} rhs={c.rhs:<12} {'pass' if c.passed else 'FAIL'}"
                for c in report.checks
            ]
            lines.append(f"symmetric: {report.symmetric}  strictly unimodal: {report.strictly_unimodal}")
            if cyclic is not None:
                passed = all(c.passed for c in cyclic.checks)
                lines.append(f"cyclic descents {cyclic.d}: {'pass' if passed else 'FAIL'}")
            lines += [
                f"m={r.m}: box {r.box_count}, formula {to_fraction(r.formula_count)}, pairs {r.distinct_pairs}"
                for r in realization
            ]
            return lines

        _emit(_resolve_format(output_format), document, table)
        failed = [c.m for c in report.checks if not c.passed]
        if cyclic is not None:
            failed += [c.m for c in cyclic.checks if not c.passed]
        if failed or not all(r.agrees for r in realization):
            raise InternalConsistencyError(f"Identity checks failed for M in {sorted(set(failed))}.")


@cli.command()
@click.argument("cartan_type")
@click.pass_context
def diagram(ctx: click.Context, *, cartan_type: str) -> None:
    """Print the Dynkin diagram of CARTAN_TYPE and its completed diagrams."""
    with _reported_errors(ctx):
        rs = build_root_system(cartan_type)
        blocks = [render_diagram(rs, d, title) for title, d in completed_diagrams(rs)]
        click.echo("\n\n".join(blocks))


def main() -> None:
    """Main entry point for the CLI."""
    cli()


if __name__ == "__main__":
    main()
