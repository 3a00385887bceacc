"""Command line driver: ``gl22r verify|coeffs|dump|sweep|graph``.

Exit codes: 0 all asserted checks pass, 1 a check failed, 2 bad configuration.
Complex numbers are written ``re,im`` on the command line and as ``[re, im]``
in JSON.  Reports carry no timestamps or timings so identical configurations
give byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from . import __version__, limits, suites
from .fundrep import INDEX, GeneratorTerm, represent
from .params import ParameterError, PoleError, derive_kinematics, make_global
from .rmatrix import coefficients, cybe_residual, r_fund_table, table_operator

SCHEMA = 1
THREADS_ENV = "GL22R_THREADS"

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2

DEFAULTS = {"h": "0.3,0", "alpha": "1,0", "x1": "2.1,0.3", "g1": "1,0", "x2": "-1.7,2.2", "g2": "1.2,0.1",
            "x3": "0.4,-3.1", "g3": "0.8,0"}


class ConfigError(ValueError):
    pass


def parse_complex(text: str) -> complex:
    """``"re,im"`` or ``"re"`` to complex."""
    parts = [p.strip() for p in str(text).split(",")]
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise ConfigError(f"cannot parse complex number {text!r}; expected 're,im'")


def cjson(v) -> list[float]:
    v = complex(v)
    return [float(v.real), float(v.imag)]


def _jsonable(obj):
    if isinstance(obj, (complex, np.complexfloating)):
        return cjson(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, np.ndarray):
        return [_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def dumps(obj) -> str:
    return json.dumps(_jsonable(obj), sort_keys=True, indent=2, allow_nan=True) + "\n"


@dataclass
class RunConfig:
    command: str
    h: complex = 0.3
    alpha: complex = 1.0
    sites: list = field(default_factory=list)  # [(x, gamma), ...]
    tolerance: float | None = None
    seed: int = 0
    output: str | None = None
    format: str = "json"
    suite: list = field(default_factory=list)
    family: list = field(default_factory=list)
    samples: int | None = None
    what: str = "r"
    generator: str | None = None
    level: int = 0
    h_range: tuple = (0.1, 0.9)
    steps: int = 9
    h_given: bool = False

    def validate(self):
        if self.tolerance is not None and not self.tolerance > 0:
            raise ConfigError("tolerance must be positive")
        if self.format not in ("json", "csv"):
            raise ConfigError("format must be json or csv")
        if self.samples is not None and self.samples < 1:
            raise ConfigError("samples must be >= 1")
        if self.steps < 1:
            raise ConfigError("steps must be >= 1")
        for name in self.suite:
            if name not in suites.SUITES:
                raise ConfigError(f"unknown suite {name!r}; choose from all, {', '.join(suites.SUITES)}")
        for name in self.family:
            if name not in limits.FAMILIES:
                raise ConfigError(f"unknown family {name!r}; choose from {', '.join(limits.FAMILIES)}")
        if self.generator is not None and self.generator not in INDEX_BY_NAME:
            raise ConfigError(f"unknown generator {self.generator!r}; choose from {', '.join(INDEX_BY_NAME)}")

    def described(self) -> dict:
        d = asdict(self)
        d.pop("output")
        return d


INDEX_BY_NAME = {f"{g.kind}{g.i}{g.j}" if g.kind not in ("A", "B") else g.kind: g for g in INDEX}


def threads() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        n = int(raw)
    except ValueError:
        raise ConfigError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None
    if n < 1:
        raise ConfigError(f"{THREADS_ENV} must be >= 1")
    return n


def environment(cfg: RunConfig) -> dict:
    return {"version": __version__, "seed": cfg.seed, "numpy": np.__version__,
            "tolerances": dict(suites.THRESHOLDS) if cfg.tolerance is None
            else {k: cfg.tolerance for k in suites.THRESHOLDS},
            "order_min": suites.ORDER_MIN, "quantum_slope": list(suites.QUANTUM_SLOPE)}


def _global(cfg: RunConfig):
    try:
        return make_global(cfg.h, cfg.alpha)
    except ParameterError as exc:
        raise ConfigError(str(exc)) from None


def _kin(gp, site):
    try:
        return derive_kinematics(gp, *site)
    except PoleError as exc:
        raise ConfigError(str(exc)) from None


def _header(gp, kins) -> dict:
    head = {"h": gp.h, "hprime": gp.hprime, "alpha": gp.alpha}
    for n, k in enumerate(kins, 1):
        head.update({f"x{n}": k.x, f"gamma{n}": k.gamma, f"z{n}": k.z, f"q{n}": k.q})
    return head


def _suite_json(res: suites.SuiteResult) -> dict:
    return {
        "passed": res.passed,
        "max_residual": res.max_residual,
        "checks": [{"name": c.name, "residual": c.residual, "threshold": c.threshold, "passed": c.passed,
                    "kind": c.kind, **({"error": c.error} if c.error else {})} for c in res.checks],
        "tables": res.tables,
        "info": res.info,
    }


# commands -----------------------------------------------------------------

def cmd_verify(cfg: RunConfig) -> tuple[dict, bool]:
    names = cfg.suite or list(suites.SUITES)
    if cfg.h_given and cfg.h == 0:
        raise ConfigError("verify needs h != 0; the h -> 0 limit is covered by the limits suite")
    gp = _global(cfg) if cfg.h_given else None
    out: dict = {}
    for name in names:
        kw = {"tol": cfg.tolerance, "gp": gp}
        if cfg.samples is not None and name != "jacobi":
            kw["n"] = cfg.samples
        if name == "limits" and cfg.family:
            kw["families"] = tuple(cfg.family)
        out[name] = _suite_json(suites.run_suite(name, cfg.seed, **kw))
    report = {"schema": SCHEMA, "command": "verify", "config": cfg.described(), "environment": environment(cfg),
              "suites": out, "passed": all(s["passed"] for s in out.values())}
    return report, report["passed"]


def cmd_coeffs(cfg: RunConfig) -> tuple[dict, bool]:
    gp = _global(cfg)
    k1, k2 = _kin(gp, cfg.sites[0]), _kin(gp, cfg.sites[1])
    try:
        cs = coefficients(gp, k1, k2)
    except PoleError as exc:
        raise ConfigError(str(exc)) from None
    return {"schema": SCHEMA, "command": "coeffs", "header": _header(gp, [k1, k2]),
            "coefficients": cs.as_dict()}, True


def cmd_dump(cfg: RunConfig) -> tuple[dict, bool]:
    """r-matrix (or one represented generator) with a parameter header.

    At h = 0 the full r-matrix diverges; the finite rational limit is dumped.
    """
    x1, g1 = cfg.sites[0]
    x2, g2 = cfg.sites[1]
    if cfg.h == 0:
        if cfg.what != "r":
            raise ConfigError("generator dumps need h != 0")
        s1, s2 = limits.Site(x1, g1), limits.Site(x2, g2)
        glob = {"alpha": cfg.alpha}
        try:
            cs = limits.limit_coefficients("full_rational", s1, s2, glob)
        except PoleError as exc:
            raise ConfigError(str(exc)) from None
        mat = table_operator(cs, constant=0.0)
        header = {"h": 0j, "alpha": cfg.alpha, "x1": x1, "gamma1": g1, "x2": x2, "gamma2": g2,
                  "form": "full_rational", "u1": x1 + 1 / x1, "u2": x2 + 1 / x2}
        return {"schema": SCHEMA, "command": "dump", "what": "r", "header": header,
                "coefficients": cs.as_dict(), "shape": list(mat.shape), "matrix": mat}, True
    gp = _global(cfg)
    k1, k2 = _kin(gp, (x1, g1)), _kin(gp, (x2, g2))
    if cfg.what == "generator":
        name = cfg.generator or "Q11"
        mat = represent(GeneratorTerm(INDEX_BY_NAME[name], cfg.level), k1).mat
        return {"schema": SCHEMA, "command": "dump", "what": "generator", "generator": name, "level": cfg.level,
                "header": _header(gp, [k1]), "shape": list(mat.shape), "matrix": mat}, True
    try:
        rm = r_fund_table(gp, k1, k2)
    except PoleError as exc:
        raise ConfigError(str(exc)) from None
    header = dict(_header(gp, [k1, k2]), form="trigonometric")
    return {"schema": SCHEMA, "command": "dump", "what": "r", "header": header,
            "coefficients": rm.coeffs.as_dict(), "shape": list(rm.op.mat.shape), "matrix": rm.op.mat}, True


def load_matrix(path_or_text: str) -> np.ndarray:
    """Read a dumped matrix back (inverse of ``dump``)."""
    text = path_or_text
    if not text.lstrip().startswith("{"):
        with open(path_or_text, encoding="utf-8") as fh:
            text = fh.read()
    data = json.loads(text)
    arr = np.array(data["matrix"], dtype=float)
    return arr[..., 0] + 1j * arr[..., 1]


SWEEP_COLUMNS = ["h_re", "h_im", "z1_re", "z1_im", "z2_re", "z2_im"] + \
    [f"{c}_{p}" for c in "ABCDEFGHKL" for p in ("re", "im")] + \
    ["linear", "quadratic", "antisymmetry", "cybe", "passed"]


def _sweep_row(cfg: RunConfig, h: float, tol: float) -> list:
    try:
        gp = make_global(h, cfg.alpha)
        kins = [derive_kinematics(gp, *s) for s in cfg.sites[:3]]
        rm = r_fund_table(gp, kins[0], kins[1])
        cs = rm.coeffs
        lin = max(cs.linear_identities().values())
        quad = max(cs.quadratic_identities().values())
        anti = rm.antisymmetry_residual(r_fund_table(gp, kins[1], kins[0]))
        cy = cybe_residual(gp, *kins)
    except (PoleError, ParameterError):
        return [h, 0.0] + [float("nan")] * (len(SWEEP_COLUMNS) - 3) + [False]
    vals = [h, 0.0, kins[0].z.real, kins[0].z.imag, kins[1].z.real, kins[1].z.imag]
    for v in cs.as_array():
        vals += [v.real, v.imag]
    vals += [lin, quad, anti, cy, bool(max(lin, quad) < tol and anti < tol and cy < tol)]
    return [float(v) if not isinstance(v, bool) else v for v in vals]


def cmd_sweep(cfg: RunConfig) -> tuple[dict, bool]:
    """Residuals along real h at fixed sites; one row per h value."""
    lo, hi = cfg.h_range
    hs = [float(v) for v in np.linspace(lo, hi, cfg.steps)]
    tol = cfg.tolerance or suites.THRESHOLDS["cybe"]
    with ThreadPoolExecutor(max_workers=threads()) as pool:
        rows = list(pool.map(lambda h: _sweep_row(cfg, h, tol), hs))
    ok = all(r[-1] for r in rows)
    return {"schema": SCHEMA, "command": "sweep", "config": cfg.described(), "environment": environment(cfg),
            "columns": SWEEP_COLUMNS, "rows": rows, "passed": ok}, ok


def cmd_graph(cfg: RunConfig) -> tuple[dict, bool]:
    g = limits.degeneration_graph()
    ok = g.covering == limits.ARROWS
    return {"schema": SCHEMA, "command": "graph", "nodes": list(g.nodes),
            "partitions": {n: sorted(sorted(b) for b in p) for n, p in g.special_point_grouping.items()},
            "families": limits.NODE_FAMILY, "edges": sorted(list(e) for e in g.edges),
            "covering": sorted(list(e) for e in g.covering), "arrows": sorted(list(e) for e in limits.ARROWS),
            "matches_arrows": ok, "passed": ok}, ok


COMMANDS = {"verify": cmd_verify, "coeffs": cmd_coeffs, "dump": cmd_dump, "sweep": cmd_sweep, "graph": cmd_graph}


def to_csv(report: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    cmd = report["command"]
    if cmd == "sweep":
        w.writerow(report["columns"])
        w.writerows([repr(v) if isinstance(v, float) else v for v in row] for row in report["rows"])
    elif cmd == "verify":
        w.writerow(["suite", "check", "residual", "threshold", "passed"])
        for sname, s in report["suites"].items():
            for c in s["checks"]:
                w.writerow([sname, c["name"], repr(c["residual"]), repr(c["threshold"]), c["passed"]])
    elif cmd == "coeffs":
        w.writerow(["name", "re", "im"])
        for k, v in report["coefficients"].items():
            w.writerow([k, repr(complex(v).real), repr(complex(v).imag)])
    else:
        raise ConfigError(f"csv output is not available for {cmd}")
    return buf.getvalue()


# argument parsing -----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gl22r", description="Classical r-matrix of the deformed gl(2|2) loop algebra.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, sites=2):
        sp.add_argument("--h", default=None, help="deformation parameter 're,im' (default 0.3,0)")
        sp.add_argument("--alpha", default=DEFAULTS["alpha"], help="constant alpha 're,im'")
        for n in range(1, sites + 1):
            sp.add_argument(f"--x{n}", default=DEFAULTS[f"x{n}"], help=f"spectral parameter of site {n}")
            sp.add_argument(f"--g{n}", default=DEFAULTS[f"g{n}"], help=f"gamma of site {n}")
        sp.add_argument("--tolerance", type=float, default=None, help="override residual thresholds")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--output", default=None, help="write report here instead of stdout")
        sp.add_argument("--format", default="json", choices=("json", "csv"))

    v = sub.add_parser("verify", help="run verification suites")
    common(v, sites=0)
    v.add_argument("--suite", action="append", default=[], help="suite name or 'all' (repeatable)")
    v.add_argument("--family", action="append", default=[], help="limit family for the limits suite (repeatable)")
    v.add_argument("--samples", type=int, default=None, help="samples per suite")

    c = sub.add_parser("coeffs", help="the ten coefficients at one site pair")
    common(c)
    d = sub.add_parser("dump", help="write the 16x16 r-matrix or a represented generator as JSON")
    common(d)
    d.add_argument("--what", default="r", choices=("r", "generator"))
    d.add_argument("--generator", default=None, help="generator name, e.g. Q12, R11, A")
    d.add_argument("--level", type=int, default=0)
    s = sub.add_parser("sweep", help="residual table along real h")
    common(s, sites=3)
    s.add_argument("--h-min", type=float, default=0.1)
    s.add_argument("--h-max", type=float, default=0.9)
    s.add_argument("--steps", type=int, default=9)
    g = sub.add_parser("graph", help="degeneration graph of the limits")
    g.add_argument("--output", default=None)
    g.add_argument("--format", default="json", choices=("json",))
    g.add_argument("--seed", type=int, default=0)
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=ns.command, seed=getattr(ns, "seed", 0), output=ns.output, format=ns.format)
    h_raw = getattr(ns, "h", None)
    cfg.h_given = h_raw is not None
    if ns.command == "graph":
        return cfg
    cfg.h = parse_complex(h_raw if h_raw is not None else DEFAULTS["h"])
    cfg.alpha = parse_complex(ns.alpha)
    cfg.tolerance = ns.tolerance
    n = 0
    while hasattr(ns, f"x{n + 1}"):
        n += 1
        cfg.sites.append((parse_complex(getattr(ns, f"x{n}")), parse_complex(getattr(ns, f"g{n}"))))
    if ns.command == "verify":
        cfg.suite = [] if "all" in ns.suite else list(ns.suite)
        cfg.family = list(ns.family)
        cfg.samples = ns.samples
    if ns.command == "dump":
        cfg.what, cfg.generator, cfg.level = ns.what, ns.generator, ns.level
    if ns.command == "sweep":
        cfg.h_range, cfg.steps = (ns.h_min, ns.h_max), ns.steps
    cfg.validate()
    return cfg


def run(argv: list[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_OK
    try:
        cfg = config_from_args(ns)
        threads()
        report, ok = COMMANDS[cfg.command](cfg)
        text = to_csv(report) if cfg.format == "csv" else dumps(report)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    if cfg.output:
        try:
            with open(cfg.output, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"cannot write {cfg.output}: {exc}", file=sys.stderr)
            return EXIT_CONFIG
    else:
        stdout.write(text)
    return EXIT_OK if ok else EXIT_FAIL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
