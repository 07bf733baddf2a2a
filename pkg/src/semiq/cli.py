"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Sequence

from . import __version__
from .errors import CrossCheckFailed, RankIdentityViolated, SemiqError, TheoremMismatch
from .exactnum import CONVENTIONS, CyclotomicField, CyclotomicNumber
from .ncalg import AlgebraPresentation, NcElement, aliases, default_convention, parse_element, preset

SCHEMA = "semiq.v1"
SCHEMA_PATH = Path(__file__).with_name("schema") / f"{SCHEMA}.json"

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class VerificationMismatch(Exception):
    def __init__(self, message: str, payload: dict | None = None):
        super().__init__(message)
        self.payload = payload or {}


@dataclass
class RunConfig:
    """Everything a run depends on; output is a function of this record alone."""

    subcommand: str
    preset: str | None = None
    config_path: str | None = None
    l: int | None = None
    convention: str | None = None
    format: str = "text"
    output: str | None = None
    seed: int = 0
    jobs: int = 1
    allow_even: bool = False
    options: dict = field(default_factory=dict)

    def public(self) -> dict:
        """The part echoed into JSON output (output path and job count do not affect results)."""
        data = asdict(self)
        data.pop("output")
        data.pop("jobs")
        return data


# -- helpers ----------------------------------------------------------------


def _pmap(fn: Callable, items: Iterable, jobs: int) -> list:
    """Ordered map, optionally on a thread pool; results keep input order."""
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def scalar_json(c) -> dict:
    if isinstance(c, CyclotomicNumber):
        return c.to_json()
    return {"text": str(c)}


def element_json(e: NcElement) -> dict:
    return {
        "text": str(e),
        "terms": [{"monomial": list(m), "coefficient": scalar_json(c)} for m, c in e.sorted_terms()],
    }


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc


@dataclass
class AlgebraSetup:
    presentation: AlgebraPresentation
    preset_name: str | None
    l: int
    convention: str
    aliases: dict

    @property
    def field(self) -> CyclotomicField:
        return CyclotomicField(self.l)

    def parse(self, text: str) -> NcElement:
        return parse_element(text, self.presentation, self.field, self.aliases)

    def describe(self) -> dict:
        return {
            "presentation": self.presentation.to_config(),
            "preset": self.preset_name,
            "l": self.l,
            "convention": self.convention,
        }


def _algebra(cfg: RunConfig) -> AlgebraSetup:
    file_cfg = _load_config(cfg.config_path)
    name = cfg.preset or file_cfg.get("preset")
    if name:
        try:
            pres = preset(name)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    elif "presentation" in file_cfg:
        try:
            pres = AlgebraPresentation.from_config(file_cfg["presentation"])
        except (KeyError, ValueError, TypeError) as exc:
            raise UsageError(f"bad presentation in config: {exc}") from exc
    else:
        raise UsageError("give --preset or --config with a presentation")
    l = cfg.l if cfg.l is not None else file_cfg.get("l")
    if l is None:
        raise UsageError("the root order --l is required")
    l = int(l)
    if l < 2 or (not cfg.allow_even and (l < 3 or l % 2 == 0)):
        raise UsageError(f"l = {l}: need odd l >= 3 (or --allow-even with l >= 2)")
    convention = cfg.convention or file_cfg.get("convention") or default_convention(pres)
    if convention not in CONVENTIONS:
        raise UsageError(f"unknown convention {convention!r}")
    cfg.l, cfg.convention = l, convention
    field_ = CyclotomicField(l)
    return AlgebraSetup(pres, name, l, convention, aliases(pres, field_, l))


def _context(setup: AlgebraSetup, cfg: RunConfig):
    from .pfa import BracketContext

    return BracketContext(setup.presentation, setup.l, setup.convention, allow_even=cfg.allow_even)


# -- subcommands ------------------------------------------------------------


def cmd_bracket(cfg: RunConfig) -> tuple[dict, str]:
    from .pfa import bracket

    setup = _algebra(cfg)
    f, a = setup.parse(cfg.options["f"]), setup.parse(cfg.options["a"])
    value = bracket(_context(setup, cfg), f, a)
    result = {**setup.describe(), "f": element_json(f), "a": element_json(a), "bracket": element_json(value)}
    text = f"{value}\n# {{f, a}} with f = {f}, a = {a}; l = {setup.l}, convention = {setup.convention}\n"
    return result, text


def cmd_curvature(cfg: RunConfig) -> tuple[dict, str]:
    from .pfa import curvature_jacobiator, curvature_taylor

    setup = _algebra(cfg)
    ctx = _context(setup, cfg)
    f, g, a = (setup.parse(cfg.options[k]) for k in ("f", "g", "a"))
    taylor = curvature_taylor(ctx, f, g, a)
    jac = curvature_jacobiator(ctx, f, g, a)
    agree = taylor == jac
    result = {**setup.describe(), "f": element_json(f), "g": element_json(g), "a": element_json(a),
              "taylor": element_json(taylor), "jacobiator": element_json(jac), "methods_agree": agree}
    text = (f"Phi(f, g)(a) = {taylor}\n"
            f"jacobiator   = {jac}\n"
            f"methods-agree: {'true' if agree else 'false'}\n"
            f"# l = {setup.l}, convention = {setup.convention}\n")
    if not agree:
        raise VerificationMismatch("curvature methods disagree", {"result": result, "text": text})
    return result, text


def _default_samples(setup: AlgebraSetup) -> tuple[list[str], list[str]]:
    pres, l = setup.presentation, setup.l
    if pres.is_uqsl2:
        return ["x", "y", "z"], ["E", "F", "K"]
    names = pres.names
    central = [f"{n}^{l}" for n in names]
    if len(names) >= 2:
        central.append(f"{names[0]}^{l} {names[1]}^{l}")
    if names:
        central.append(f"{names[0]}^{2 * l}")
    ambient = list(names)
    if len(names) >= 2:
        ambient.append(f"{names[0]} {names[1]}")
    return central, ambient


def cmd_check_axioms(cfg: RunConfig) -> tuple[dict, str]:
    if cfg.options.get("kind", "pfa") == "poisson-module":
        return _check_poisson_module(cfg)
    from .pfa import check_pfa_axioms

    setup = _algebra(cfg)
    central_txt, ambient_txt = _default_samples(setup)
    central_txt = cfg.options.get("central") or central_txt
    ambient_txt = cfg.options.get("ambient") or ambient_txt
    central = [setup.parse(t) for t in central_txt]
    ambient = [setup.parse(t) for t in ambient_txt]
    report = check_pfa_axioms(_context(setup, cfg), central, ambient)
    result = {**setup.describe(), "central": central_txt, "ambient": ambient_txt, "report": report.to_json()}
    text = str(report) + "\n"
    if not report.passed:
        raise VerificationMismatch("axiom check failed", {"result": result, "text": text})
    return result, text


def _check_poisson_module(cfg: RunConfig) -> tuple[dict, str]:
    from .psmod import (
        FinDimPoissonAlgebra,
        PoissonModuleData,
        check_poisson_algebra,
        check_poisson_module,
        corrupt,
        random_valid_pair,
        trivial_extension,
    )

    tables = cfg.options.get("tables")
    if tables:
        data = _load_config(tables)
        try:
            A = FinDimPoissonAlgebra.from_json(data["algebra"])
            M = PoissonModuleData.from_json(A.dim, data["module"])
        except (KeyError, ValueError, TypeError) as exc:
            raise UsageError(f"bad tables file: {exc}") from exc
        algebra_report = check_poisson_algebra(A)
        module_report = check_poisson_module(A, M)
        ext_report = check_poisson_algebra(trivial_extension(A, M))
        equivalent = module_report.passed == ext_report.passed
        result = {"mode": "tables", "algebra": algebra_report.to_json(), "module": module_report.to_json(),
                  "extension": ext_report.to_json(), "extension_equivalent": equivalent}
        text = f"{algebra_report}\n{module_report}\n{ext_report}\nextension-equivalent: {str(equivalent).lower()}\n"
        if not (algebra_report.passed and module_report.passed and equivalent):
            raise VerificationMismatch("Poisson module check failed", {"result": result, "text": text})
        return result, text

    count = int(cfg.options.get("random") or 20)
    rng = random.Random(cfg.seed)
    cases = []
    for t in range(count):
        A, M = random_valid_pair(rng)
        corrupted = t % 2 == 1
        if corrupted:
            M = corrupt(M, rng)
        cases.append((t, corrupted, A, M))

    def run_case(case):
        t, corrupted, A, M = case
        module_ok = check_poisson_module(A, M).passed
        ext_ok = check_poisson_algebra(trivial_extension(A, M)).passed
        return {"index": t, "corrupted": corrupted, "algebra_dim": A.dim, "module_dim": M.dim,
                "module_passes": module_ok, "extension_passes": ext_ok, "equivalent": module_ok == ext_ok}

    rows = _pmap(run_case, cases, cfg.jobs)
    all_equiv = all(r["equivalent"] for r in rows)
    result = {"mode": "random", "count": count, "cases": rows, "all_equivalent": all_equiv,
              "corruptions_detected": sum(1 for r in rows if r["corrupted"] and not r["module_passes"])}
    lines = [f"{'case':>4} {'corrupt':>7} {'dimA':>4} {'dimM':>4} {'module':>6} {'ext':>5} {'equiv':>5}"]
    for r in rows:
        lines.append(f"{r['index']:>4} {str(r['corrupted']).lower():>7} {r['algebra_dim']:>4} {r['module_dim']:>4} "
                     f"{str(r['module_passes']).lower():>6} {str(r['extension_passes']).lower():>5} "
                     f"{str(r['equivalent']).lower():>5}")
    lines.append(f"extension-equivalent on all cases: {str(all_equiv).lower()}")
    text = "\n".join(lines) + "\n"
    if not all_equiv:
        raise VerificationMismatch("extension equivalence violated", {"result": result, "text": text})
    return result, text


def _need_grid(cfg: RunConfig, *names: str) -> None:
    for n in names:
        if cfg.options.get(n) is None:
            raise UsageError(f"--{n.replace('_', '-')} is required")


def cmd_decompose(cfg: RunConfig) -> tuple[dict, str]:
    from .projgeom import decompose_sheaf

    _need_grid(cfg, "n")
    n, l, j = cfg.options["n"], cfg.l, cfg.options.get("j", 0)
    if n < 1 or l < 2:
        raise UsageError("need n >= 1 and l >= 2")
    dec = decompose_sheaf(n, l, j)
    result = {**dec.to_json(), "rank": dec.rank}
    text = f"Q({j}) on P^{n} (l = {l}) = {dec}\nrank = {dec.rank}\n"
    return result, text


def cmd_cohomology(cfg: RunConfig) -> tuple[dict, str]:
    from .projgeom import quantum_cohomology

    _need_grid(cfg, "n", "jmin", "jmax")
    n, l = cfg.options["n"], cfg.l
    if n < 1 or l < 2:
        raise UsageError("need n >= 1 and l >= 2")
    js = range(cfg.options["jmin"], cfg.options["jmax"] + 1)
    rows = [{"j": j, "h": list(h)} for j, h in zip(js, _pmap(lambda j: quantum_cohomology(n, l, j), js, cfg.jobs))]
    result = {"n": n, "l": l, "rows": rows}
    header = f"{'j':>4} " + " ".join(f"{'h' + str(i):>6}" for i in range(n + 1))
    lines = [header] + [f"{r['j']:>4} " + " ".join(f"{h:>6}" for h in r["h"]) for r in rows]
    return result, "\n".join(lines) + "\n"


def cmd_product_table(cfg: RunConfig) -> tuple[dict, str]:
    from .projgeom import product_table_p1

    l = cfg.l
    if l < 2:
        raise UsageError("need l >= 2")
    entries = product_table_p1(l)
    result = {"l": l, "entries": [e.to_json() for e in entries]}
    lines = [f"{'p':>3} {'q':>3} {'eps^':>5} {'case':>6}  scalar"]
    lines += [f"{e.p:>3} {e.q:>3} {e.exponent:>5} {e.case:>6}  {e.scalar}" for e in entries]
    return result, "\n".join(lines) + "\n"


def cmd_bwb(cfg: RunConfig) -> tuple[dict, str]:
    from .bwb import bwb_table

    _need_grid(cfg, "lambda_min", "lambda_max")
    l = cfg.l
    if l < 3 or l % 2 == 0:
        raise UsageError("need odd l >= 3")
    lo, hi = cfg.options["lambda_min"], cfg.options["lambda_max"]
    rows = [r for chunk in _pmap(lambda lam: bwb_table(l, lam, lam), range(lo, hi + 1), cfg.jobs) for r in chunk]
    result = {"l": l, "rows": rows}

    def show(v):
        return "-" if v is None else str(v)

    lines = [f"{'lambda':>6} {'h0':>4} {'h1':>4} {'lam0':>4} {'lam1':>4} {'dimL':>5}"]
    lines += [f"{r['lambda']:>6} {r['h0']:>4} {r['h1']:>4} {show(r['lambda0']):>4} {show(r['lambda1']):>4} "
              f"{show(r['dim_L']):>5}" for r in rows]
    return result, "\n".join(lines) + "\n"


def cmd_uqsl2_table(cfg: RunConfig) -> tuple[dict, str]:
    from .exactnum import ADDITIVE
    from .pfa import compare_curvature_formula, compare_uqsl2_table

    l = cfg.l
    if l < 3 or l % 2 == 0:
        raise UsageError("need odd l >= 3")
    convention = cfg.convention or ADDITIVE
    if convention not in CONVENTIONS:
        raise UsageError(f"unknown convention {convention!r}")
    cfg.convention = convention
    comparison = compare_uqsl2_table(l, convention)
    curvature = compare_curvature_formula(l, convention)
    result = {**comparison.to_json(), "curvature_formula": curvature}
    lines = [f"l = {l}, convention = {convention}, fitted scalar on {{x,z}}: {comparison.scalar}"]
    for e in comparison.entries:
        lines.append(f"  {e['pair']:<6} {e['role']:<9} {'match' if e['match'] else 'MISMATCH':<8} {e['computed']}")
    lines.append("curvature Phi(x,y)(a) against the closed form (recorded, not asserted):")
    for row in curvature:
        lines.append(f"  a = {row['a']}: equal = {str(row['equal']).lower()}, "
                     f"differs by pure-K term = {str(row['differs_by_pure_k_term']).lower()}")
    text = "\n".join(lines) + "\n"
    if not comparison.passed:
        raise VerificationMismatch("bracket table does not match", {"result": result, "text": text})
    return result, text


COMMANDS = {
    "bracket": cmd_bracket,
    "curvature": cmd_curvature,
    "check-axioms": cmd_check_axioms,
    "decompose": cmd_decompose,
    "cohomology": cmd_cohomology,
    "product-table": cmd_product_table,
    "bwb": cmd_bwb,
    "uqsl2-table": cmd_uqsl2_table,
}


# -- argument parsing -------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="semiq", description="Exact brackets, curvature and cohomology tables "
                                     "for q-deformed algebras at roots of unity.")
    parser.add_argument("--version", action="version", version=f"semiq {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--output", help="write to this file instead of standard output")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=1, help="worker threads for independent table cells")

    algebra = argparse.ArgumentParser(add_help=False)
    algebra.add_argument("--preset", help="torus2, uqsl2 or qplane(n)")
    algebra.add_argument("--config", dest="config_path", help="JSON file with presentation, l, convention")
    algebra.add_argument("--l", type=int)
    algebra.add_argument("--convention", choices=CONVENTIONS)
    algebra.add_argument("--allow-even", action="store_true")

    p = sub.add_parser("bracket", parents=[common, algebra], help="{f, a} for central f")
    p.add_argument("--f", required=True)
    p.add_argument("--a", required=True)

    p = sub.add_parser("curvature", parents=[common, algebra], help="Phi(f, g)(a) by both methods")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--a", required=True)

    p = sub.add_parser("check-axioms", parents=[common, algebra], help="axiom suites")
    p.add_argument("--kind", choices=("pfa", "poisson-module"), default="pfa")
    p.add_argument("--central", action="append", help="central sample element (repeatable)")
    p.add_argument("--ambient", action="append", help="ambient sample element (repeatable)")
    p.add_argument("--tables", help="JSON file with algebra and module tables (poisson-module)")
    p.add_argument("--random", type=int, help="number of random valid/corrupted pairs (poisson-module)")

    p = sub.add_parser("decompose", parents=[common], help="Q(j) as a sum of line bundles")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--j", type=int, default=0)

    p = sub.add_parser("cohomology", parents=[common], help="cohomology dimensions of Q(j)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--jmin", type=int, required=True)
    p.add_argument("--jmax", type=int, required=True)

    p = sub.add_parser("product-table", parents=[common], help="n = 1 multiplication table")
    p.add_argument("--l", type=int, required=True)

    p = sub.add_parser("bwb", parents=[common], help="Borel-Weil-Bott table for SL_eps(2)")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--lambda-min", type=int, required=True)
    p.add_argument("--lambda-max", type=int, required=True)

    p = sub.add_parser("uqsl2-table", parents=[common], help="computed brackets against the closed forms")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--convention", choices=CONVENTIONS)
    return parser


_CONFIG_KEYS = {"subcommand", "preset", "config_path", "l", "convention", "format", "output", "seed", "jobs",
                "allow_even"}


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    values = vars(ns)
    cfg = RunConfig(**{k: values[k] for k in _CONFIG_KEYS if k in values})
    cfg.options = {k: v for k, v in values.items() if k not in _CONFIG_KEYS and v is not None}
    return cfg


def _emit(cfg: RunConfig, payload: dict, text: str, stream) -> None:
    if cfg.format == "json":
        out = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        out = text
    if cfg.output:
        Path(cfg.output).write_text(out)
    else:
        stream.write(out)


def _envelope(cfg: RunConfig, status: str, result: dict) -> dict:
    return {"schema": SCHEMA, "command": cfg.subcommand, "status": status, "config": cfg.public(), "result": result}


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    cfg = config_from_args(ns)
    if cfg.jobs < 1:
        stderr.write("semiq: error: --jobs must be positive\n")
        return EXIT_USAGE
    try:
        result, text = COMMANDS[cfg.subcommand](cfg)
    except VerificationMismatch as exc:
        _emit(cfg, _envelope(cfg, "mismatch", exc.payload.get("result", {})), exc.payload.get("text", ""), stdout)
        stderr.write(f"semiq: verification mismatch: {exc}\n")
        return EXIT_MISMATCH
    except (TheoremMismatch, CrossCheckFailed, RankIdentityViolated) as exc:
        _emit(cfg, _envelope(cfg, "mismatch", {"error": type(exc).__name__, "message": str(exc)}),
              f"mismatch: {exc}\n", stdout)
        stderr.write(f"semiq: verification mismatch: {exc}\n")
        return EXIT_MISMATCH
    except (UsageError, SemiqError, ValueError) as exc:
        stderr.write(f"semiq: error: {exc}\n")
        return EXIT_USAGE
    _emit(cfg, _envelope(cfg, "ok", result), text, stdout)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
