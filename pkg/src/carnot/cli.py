"""Command-line front end.

Thin adapters only: each subcommand resolves its inputs, calls one module
operation set, and renders the result as text or one JSON document.  Exit
codes: 0 success, 1 a computed check or certification failed (the report
is still emitted), 2 malformed input or usage.  Output is deterministic;
--threads is accepted for interface stability but does not change anything.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import catalog as _catalog
from .algebra import (
    InputError,
    NotNilpotentError,
    Subspace,
    hausdorff_dimension,
    jacobi_check,
    stratification_check,
)
from .catalog import CatalogEntry, _parse_coefficient
from .curvature import trichotomy_report
from .forms import (
    differential,
    form_from_dict,
    form_to_dict,
    pittet_kernel,
    scaling_weight,
)
from .group import build_scalable_lattice, check_group_closure, check_scaling_closure
from .horizontal import is_isotropic, is_regular
from .predictor import HypothesisBundle, coverage_table


def _load_entry(source: str) -> CatalogEntry:
    if os.path.exists(source):
        algebra = _catalog.load_algebra(source)
        return CatalogEntry(source, algebra, None, ())
    if ":" in source:
        return _catalog.build(source)
    raise InputError(
        "source %r is neither an existing file nor a catalog id like "
        "'heisenberg_h:2'" % source
    )


def _resolve_subspace(entry: CatalogEntry, args) -> Subspace:
    if getattr(args, "subspace", None):
        labels = [part.strip() for part in args.subspace.split(",") if part.strip()]
        if not labels:
            raise InputError("--subspace needs at least one label")
        return Subspace.from_labels(entry.algebra, labels)
    if getattr(args, "subspace_file", None):
        with open(args.subspace_file, "r", encoding="utf-8") as handle:
            data = json.load(handle)
        rows = data.get("rows") if isinstance(data, dict) else None
        if not isinstance(rows, list) or not rows:
            raise InputError('subspace file needs {"rows": [[...], ...]}')
        parsed = []
        for row in rows:
            if len(row) != entry.algebra.dimension:
                raise InputError(
                    "subspace row has %d entries, expected %d"
                    % (len(row), entry.algebra.dimension)
                )
            parsed.append(tuple(_parse_coefficient(e) for e in row))
        return Subspace(entry.algebra, parsed)
    if entry.designated_subspace is not None:
        return entry.designated_subspace
    raise InputError(
        "no subspace given and the source carries no designated one; "
        "pass --subspace or --subspace-file"
    )


def _exponent_text(base: str, e: Fraction) -> str:
    text = str(e)
    if "/" in text or "-" in text:
        return "%s^(%s)" % (base, text)
    return "%s^%s" % (base, text)


_REL_SYMBOL = {
    "equivalent": "~",
    "at_most": "<=",
    "at_least": ">=",
    "strictly_above": ">",
}


def _emit(payload: dict, args, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _subspace_name(s: Subspace) -> str:
    labels = s.coordinate_labels()
    if labels is not None:
        return "span(%s)" % ", ".join(labels)
    return "%d-dimensional subspace" % s.dim


def _vector_strings(v) -> list[str]:
    return [str(c) for c in v]


# -- subcommands -----------------------------------------------------------


def cmd_catalog(args) -> int:
    entries = _catalog.default_entries()
    payload = {"entries": [_catalog.entry_summary(e) for e in entries]}
    lines = []
    for e in entries:
        summary = _catalog.entry_summary(e)
        designated = summary["designated_subspace"]
        lines.append(
            "%-16s dim=%-3d layers=%s hausdorff=%d subspace=%s"
            % (
                summary["key"],
                summary["dimension"],
                ",".join(str(d) for d in summary["layer_dimensions"]),
                summary["hausdorff_dimension"],
                ",".join(designated) if designated else "-",
            )
        )
    _emit(payload, args, lines)
    return 0


def cmd_check(args) -> int:
    entry = _load_entry(args.source)
    algebra = entry.algebra
    jacobi = jacobi_check(algebra)
    strat = stratification_check(algebra)
    payload = {
        "source": entry.key,
        "dimension": algebra.dimension,
        "degree": algebra.declared_degree,
        "hausdorff_dimension": hausdorff_dimension(algebra),
        "weights": list(algebra.weights),
        "jacobi": {"ok": jacobi.ok, "detail": jacobi.detail},
        "stratification": {"ok": strat.ok, "detail": strat.detail},
    }
    lines = [
        "source: %s" % entry.key,
        "dimension: %d (degree %d)" % (algebra.dimension, algebra.declared_degree),
        "hausdorff dimension: %d" % payload["hausdorff_dimension"],
        "jacobi: %s (%s)" % ("ok" if jacobi.ok else "FAIL", jacobi.detail),
        "stratification: %s (%s)" % ("ok" if strat.ok else "FAIL", strat.detail),
    ]
    _emit(payload, args, lines)
    return 0 if jacobi.ok and strat.ok else 1


def cmd_certify(args) -> int:
    entry = _load_entry(args.source)
    s = _resolve_subspace(entry, args)
    iso = is_isotropic(entry.algebra, s)
    reg = is_regular(entry.algebra, s)
    witness = None
    if iso.witness is not None:
        witness = [_vector_strings(v) for v in iso.witness]
    payload = {
        "source": entry.key,
        "subspace": _subspace_name(s),
        "isotropic": iso.isotropic,
        "regular": reg.regular,
        "rank": reg.rank,
        "required_rank": reg.required_rank,
        "witness": witness,
    }
    lines = [
        "source: %s" % entry.key,
        "subspace: %s (dim %d)" % (_subspace_name(s), s.dim),
        "isotropic: %s" % ("yes" if iso.isotropic else "no"),
    ]
    if witness is not None:
        lines.append(
            "  witness pair: %s | %s"
            % (
                entry.algebra.describe(iso.witness[0]),
                entry.algebra.describe(iso.witness[1]),
            )
        )
    lines.append(
        "regular: %s (rank %d of %d)"
        % ("yes" if reg.regular else "no", reg.rank, reg.required_rank)
    )
    lines.append("certified: %s" % ("yes" if iso.isotropic and reg.regular else "no"))
    _emit(payload, args, lines)
    return 0 if iso.isotropic and reg.regular else 1


def cmd_predict(args) -> int:
    entry = _load_entry(args.source)
    s = _resolve_subspace(entry, args)
    lattice = {"auto": None, "yes": True, "no": False}[args.lattice]
    k1 = None
    if args.max_isotropic is not None:
        if args.max_isotropic < 1:
            raise InputError("--max-isotropic must be a positive dimension")
        k1 = args.max_isotropic - 1
    bundle = HypothesisBundle(entry.algebra, s, lattice, k1)
    table = coverage_table(bundle)

    def row_dict(row):
        return {
            "m": row.m,
            "status": row.status,
            "bounds": [b.as_dict() for b in row.bounds],
        }

    payload = {
        "source": entry.key,
        "subspace": _subspace_name(s),
        "filling": [row_dict(r) for r in table.filling],
        "divergence": [row_dict(r) for r in table.divergence],
        "notes": list(table.notes),
    }

    def row_lines(rows, name, base):
        out = ["%s:" % name]
        for row in rows:
            if not row.bounds:
                out.append("  %s^%d: unknown" % (row.target, row.m))
                continue
            parts = [
                "%s %s [%s]"
                % (_REL_SYMBOL[b.relation], _exponent_text(base, b.exponent), b.source)
                for b in row.bounds
            ]
            flag = "  CONFLICT" if row.conflict else ""
            out.append("  %s^%d: %s%s" % (row.target, row.m, "; ".join(parts), flag))
        return out

    lines = ["source: %s" % entry.key, "subspace: %s" % _subspace_name(s)]
    lines += row_lines(table.filling, "filling functions", "l")
    lines += row_lines(table.divergence, "divergence", "r")
    lines.append("notes:")
    lines += ["  - %s" % note for note in table.notes]
    _emit(payload, args, lines)
    conflict = any(r.conflict for r in table.filling + table.divergence)
    return 1 if conflict else 0


def cmd_curvature(args) -> int:
    entry = _load_entry(args.source)
    s = _resolve_subspace(entry, args)
    report = trichotomy_report(entry.algebra, s, maximal_asserted=args.assert_maximal)

    def item_dict(item):
        return {
            "holds": item.holds,
            "detail": item.detail,
            "witnesses": [[a, b, str(v)] for a, b, v in item.witnesses],
        }

    payload = {
        "source": entry.key,
        "subspace": _subspace_name(s),
        "ordered_basis": list(report.ordered_basis),
        "planes": [[a, b, str(v)] for a, b, v in report.planes],
        "flat_inside": item_dict(report.flat_inside),
        "negative_toward_horizontal": item_dict(report.negative_toward_horizontal),
        "positive_toward_vertical": item_dict(report.positive_toward_vertical),
    }

    def item_line(name, item):
        if item.holds is None:
            verdict = "not evaluated"
        else:
            verdict = "holds" if item.holds else "FAILS"
        return "%s: %s (%s)" % (name, verdict, item.detail)

    lines = [
        "source: %s" % entry.key,
        "subspace: %s" % _subspace_name(s),
        "ordered basis: %s" % ", ".join(report.ordered_basis),
        item_line("flat inside subspace", report.flat_inside),
        item_line("negative toward horizontal", report.negative_toward_horizontal),
        item_line("positive toward vertical", report.positive_toward_vertical),
    ]
    _emit(payload, args, lines)
    items = (
        report.flat_inside,
        report.negative_toward_horizontal,
        report.positive_toward_vertical,
    )
    return 1 if any(item.holds is False for item in items) else 0


def cmd_pittet(args) -> int:
    entry = _load_entry(args.source)
    report = pittet_kernel(entry.algebra)
    payload = {
        "source": entry.key,
        "pairs": [[a, b] for a, b in report.pairs],
        "kernel_dimension": report.kernel_dimension,
        "kernel_basis": [_vector_strings(v) for v in report.kernel_basis],
    }
    lines = [
        "source: %s" % entry.key,
        "generating pairs: %d" % len(report.pairs),
        "kernel dimension: %d" % report.kernel_dimension,
    ]
    for v in report.kernel_basis:
        combo = " + ".join(
            "%s*(%s^%s)" % (c, a, b)
            for c, (a, b) in zip(v, report.pairs)
            if c != 0
        )
        lines.append("  closed: %s" % combo)
    _emit(payload, args, lines)
    return 0


def cmd_lattice(args) -> int:
    entry = _load_entry(args.source)
    spec = build_scalable_lattice(entry.algebra)
    group_ok = check_group_closure(spec)
    scaling_ok = check_scaling_closure(spec)
    payload = {
        "source": entry.key,
        "generators": [_vector_strings(g) for g in spec.generators],
        "group_closed": group_ok.ok,
        "scaling_closed": scaling_ok.ok,
        "detail": {"group": group_ok.detail, "scaling": scaling_ok.detail},
    }
    lines = ["source: %s" % entry.key, "generators:"]
    lines += ["  %s" % entry.algebra.describe(g) for g in spec.generators]
    lines.append("group closure: %s (%s)" % ("ok" if group_ok else "FAIL", group_ok.detail))
    lines.append(
        "scaling closure: %s (%s)" % ("ok" if scaling_ok else "FAIL", scaling_ok.detail)
    )
    _emit(payload, args, lines)
    return 0 if group_ok.ok and scaling_ok.ok else 1


def cmd_forms_d(args) -> int:
    entry = _load_entry(args.source)
    with open(args.form, "r", encoding="utf-8") as handle:
        data = json.load(handle)
    form = form_from_dict(entry.algebra, data)
    if form.is_zero():
        raise InputError("the input form is zero")
    d = differential(form)
    weight = scaling_weight(form)
    payload = {
        "source": entry.key,
        "input": form_to_dict(form),
        "differential": form_to_dict(d),
        "closed": d.is_zero(),
        "scaling_weight": weight.uniform,
        "scaling_weight_by_monomial": [
            [list(mono), w] for mono, w in weight.by_monomial
        ],
    }
    lines = [
        "source: %s" % entry.key,
        "input: %r" % form,
        "differential: %r" % d,
        "closed: %s" % ("yes" if d.is_zero() else "no"),
        "scaling weight: %s"
        % (weight.uniform if weight.uniform is not None else "mixed"),
    ]
    _emit(payload, args, lines)
    return 0


# -- parser ----------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="carnot",
        description="Exact certification and growth predictions for stratified "
        "nilpotent Lie algebras.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument(
        "--threads",
        type=int,
        default=1,
        help="accepted for interface stability; output never depends on it",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", parents=[common], help="list built-in algebras")
    p.set_defaults(func=cmd_catalog)

    def with_source(name: str, help_text: str, subspace: bool = False):
        q = sub.add_parser(name, parents=[common], help=help_text)
        q.add_argument("source", help="catalog id (family:n) or JSON file path")
        if subspace:
            q.add_argument(
                "--subspace", help="comma-separated basis labels, e.g. h1,h2"
            )
            q.add_argument(
                "--subspace-file",
                help='JSON file {"rows": [["1","0",...], ...]} of rational rows',
            )
        return q

    p = with_source("check", "validate grading, Jacobi, stratification")
    p.set_defaults(func=cmd_check)

    p = with_source("certify", "isotropy and regularity of a subspace", subspace=True)
    p.set_defaults(func=cmd_certify)

    p = with_source("predict", "growth-exponent coverage table", subspace=True)
    p.add_argument(
        "--lattice",
        choices=("auto", "yes", "no"),
        default="auto",
        help="scalable-lattice hypothesis (auto: yes exactly for degree <= 2)",
    )
    p.add_argument(
        "--max-isotropic",
        type=int,
        default=None,
        help="assert this is the largest dimension of an isotropic horizontal "
        "subspace (enables the strict gap bound)",
    )
    p.set_defaults(func=cmd_predict)

    p = with_source("curvature", "sectional curvature sign report", subspace=True)
    p.add_argument(
        "--assert-maximal",
        action="store_true",
        help="assert the subspace is a maximal isotropic one (enables the "
        "negative-curvature item)",
    )
    p.set_defaults(func=cmd_curvature)

    p = with_source("pittet", "closed 2-forms from (second, first) layer pairs")
    p.set_defaults(func=cmd_pittet)

    p = with_source("lattice", "build and check a scaled-in lattice (2-step)")
    p.set_defaults(func=cmd_lattice)

    p = with_source("forms-d", "differential and scaling weight of a form")
    p.add_argument("form", help="JSON file with degree and terms")
    p.set_defaults(func=cmd_forms_d)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, NotNilpotentError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
