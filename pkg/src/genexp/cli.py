"""``genexp`` command line: dispatch, JSON/CSV/text emission and a result cache."""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
import tempfile
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import __version__
from .branching import SUNDARAM_ROW_BOUND, compare_rules, kwon_tableaux, kwon_via_C3, sundaram_tableaux
from .exponents import (
    charge_C,
    genexp_A,
    genexp_A_multi,
    genexp_C,
    genexp_C_multi,
    genexp_C_witnesses,
    king_str,
    stable_B,
    stable_C,
    stable_C_multi,
    stable_D,
    zero_weight_tableaux,
)
from .extremal import block_structure, max_power, min_power, sigma_min
from .oracle import RootSystem, lusztig_t_analogue
from .partitions import Partition, conjugate
from .poly import Poly
from .verify import SUITES, run_suite

EXIT_VERIFY_FAILED = 1
EXIT_MALFORMED = 3
EXIT_RANK = 4
EXIT_CUTOFF = 5

CONVENTIONS = {"reading": "japanese-column", "sundaram-row-bound": SUNDARAM_ROW_BOUND}


class UsageError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


@dataclass
class JobSpec:
    command: str
    kind: str | None = None
    lam: tuple[int, ...] | None = None
    rank: int | None = None
    cutoff: int | None = None
    nu: tuple[int, ...] | None = None
    mu: tuple[int, ...] | None = None
    flags: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        d = asdict(self)
        d["lambda"] = d.pop("lam")
        return {k: (list(v) if isinstance(v, tuple) else v) for k, v in d.items() if v not in (None, {})}

    def key(self) -> str:
        blob = json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()


# helpers


def _partition(text: str | None, what: str) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        p = Partition.parse(text)
    except ValueError as exc:
        raise UsageError(EXIT_MALFORMED, f"{what}: {exc}") from None
    return tuple(p)


def _need(value, what: str, code: int = EXIT_MALFORMED):
    if value is None:
        raise UsageError(code, f"missing {what}")
    return value


def _poly_payload(p: Poly):
    data = p.to_json()
    return data["coeffs"] if "coeffs" in data else data


def poly_from_payload(payload) -> Poly:
    """Inverse of the ``result.poly`` encoding."""
    if isinstance(payload, dict) and "terms" in payload:
        return Poly.from_json(payload)
    return Poly.from_json({"coeffs": payload})


def _check_rank(lam, n: int, limit: int, what: str = "lambda"):
    if n < 1:
        raise UsageError(EXIT_RANK, f"rank must be positive, got {n}")
    if len(lam) > limit:
        raise UsageError(EXIT_RANK, f"{what}={Partition(lam)} has {len(lam)} parts; at most {limit} allowed at rank {n}")


def _check_cutoff(N):
    if N is None:
        raise UsageError(EXIT_CUTOFF, "stable series need --cutoff")
    if N < 0:
        raise UsageError(EXIT_CUTOFF, f"cutoff must be non-negative, got {N}")


# dispatch


def _run_genexp(spec: JobSpec) -> tuple[dict, list | None]:
    lam = _need(spec.lam, "--lambda")
    multi, wit = spec.flags.get("multi"), spec.flags.get("witnesses")
    if spec.kind in ("a", "c"):
        n = _need(spec.rank, "--rank", EXIT_RANK)
        _check_rank(lam, n, n if spec.kind == "c" else n - 1 if n > 1 else 0)
        if spec.cutoff is not None:
            raise UsageError(EXIT_CUTOFF, "--cutoff applies only to stable series")
        if spec.kind == "a":
            poly = genexp_A_multi(lam, n) if multi else genexp_A(lam, n)
            witnesses = None
            if wit:
                from .crystal import eps_phi

                witnesses = [{"tableau": str(T), "charge": sum(i * e for i, e in enumerate(eps_phi(T, n).eps, 1))}
                             for T in zero_weight_tableaux(lam, n)]
        else:
            poly = genexp_C_multi(lam, n) if multi else genexp_C(lam, n)
            witnesses = None
            if wit:
                witnesses = [{"king": king_str(T), "distinguished": str(b), "charge": c}
                             for T, b, c in genexp_C_witnesses(lam, n)]
        return {"poly": _poly_payload(poly)}, witnesses
    _check_cutoff(spec.cutoff)
    if spec.rank is not None:
        raise UsageError(EXIT_RANK, "stable series take no --rank")
    if spec.flags.get("witnesses"):
        raise UsageError(EXIT_MALFORMED, "--witnesses is not available for stable series")
    N = spec.cutoff
    if multi:
        if spec.kind != "stable-c":
            lam = tuple(conjugate(lam))
        poly = stable_C_multi(lam, N)
    else:
        fn = {"stable-b": stable_B, "stable-c": stable_C, "stable-d": stable_D}[spec.kind]
        poly = fn(lam, N).poly
    return {"poly": _poly_payload(poly), "cutoff": N}, None


def _run_oracle(spec: JobSpec) -> tuple[dict, list | None]:
    lam = _need(spec.lam, "--lambda")
    n = _need(spec.rank, "--rank", EXIT_RANK)
    _check_rank(lam, n, n)
    rs = RootSystem(spec.kind.upper(), n)
    if spec.mu is not None:
        _check_rank(spec.mu, n, n, "mu")
    try:
        poly = lusztig_t_analogue(rs, lam, spec.mu)
    except ValueError as exc:
        raise UsageError(EXIT_RANK, str(exc)) from None
    return {"poly": _poly_payload(poly)}, None


def _run_branch(spec: JobSpec) -> tuple[dict, list | None]:
    lam, nu = _need(spec.lam, "--lambda"), _need(spec.nu, "--nu")
    n = _need(spec.rank, "--rank", EXIT_RANK)
    _check_rank(lam, n, n)
    _check_rank(nu, n, 2 * n, "nu")
    sund = sundaram_tableaux(lam, nu, n)
    kwon = kwon_tableaux(lam, nu, n)
    c3 = kwon_via_C3(lam, nu, n, witnesses=True)
    counts = {"sundaram": len(sund), "kwon": len(kwon), "kwon_via_C3": len(c3)}
    if len(set(counts.values())) != 1:
        return {"report": {"agree": False, **counts}}, None
    witnesses = None
    if spec.flags.get("witnesses"):
        witnesses = ([{"rule": "sundaram", "tableau": str(t), "weight": str(Partition(t.weight()))} for t in sund]
                     + [{"rule": "kwon", "delta": str(d), "tableau": str(S)} for d, S in kwon]
                     + [{"rule": "kwon_via_C3", "delta": str(d), "tableau": str(b)} for d, b in c3])
    return {"count": len(sund)}, witnesses


def _run_compare(spec: JobSpec) -> tuple[dict, list | None]:
    lam, nu = _need(spec.lam, "--lambda"), _need(spec.nu, "--nu")
    n = _need(spec.rank, "--rank", EXIT_RANK)
    _check_rank(lam, n, n)
    _check_rank(nu, n, 2 * n, "nu")
    rep = compare_rules(lam, nu, n, all_lr=bool(spec.flags.get("all_lr"))).to_json()
    images = rep.pop("images")
    return {"report": rep}, images


def _run_extremal(spec: JobSpec) -> tuple[dict, list | None]:
    lam = _need(spec.lam, "--lambda")
    n = _need(spec.rank, "--rank", EXIT_RANK)
    _check_rank(lam, n, n)
    if sum(lam) % 2:
        raise UsageError(EXIT_RANK, f"|lambda| = {sum(lam)} is odd: the zero weight space is empty")
    if spec.kind == "min":
        return {"count": min_power(lam, n)}, None
    if spec.kind == "max":
        return {"count": max_power(lam, n)}, None
    T = sigma_min(lam, n)
    bs = block_structure(lam, n)
    return {"report": {"sigma_row": list(bs.sigma_row()), "tableau": str(T),
                       "charge": charge_C(T, n), "min_power": min_power(lam, n)}}, None


def _run_verify(spec: JobSpec) -> tuple[dict, list | None]:
    rep = run_suite(spec.kind)
    data = rep.to_json()
    data.pop("seconds")  # keep outputs deterministic
    return {"report": data}, None


RUNNERS = {
    "genexp": _run_genexp,
    "oracle": _run_oracle,
    "branch": _run_branch,
    "compare": _run_compare,
    "extremal": _run_extremal,
    "verify": _run_verify,
}


def run(spec: JobSpec) -> dict:
    result, witnesses = RUNNERS[spec.command](spec)
    doc = {"query": spec.to_json(), "result": result}
    if witnesses is not None:
        doc["witnesses"] = witnesses
    doc["conventions"] = CONVENTIONS
    doc["provenance"] = {"package": "genexp", "version": __version__}
    return doc


# cache


class Cache:
    def __init__(self, root: str | os.PathLike):
        self.root = Path(root)

    def path(self, spec: JobSpec) -> Path:
        k = spec.key()
        return self.root / k[:2] / f"{k}.json"

    def get(self, spec: JobSpec) -> str | None:
        p = self.path(spec)
        return p.read_text() if p.exists() else None

    def put(self, spec: JobSpec, text: str):
        p = self.path(spec)
        p.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=p.parent, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(text)
            os.replace(tmp, p)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def run_cached(spec: JobSpec, cache: Cache | None, refresh: bool = False) -> str:
    if cache is not None and not refresh:
        hit = cache.get(spec)
        if hit is not None:
            return hit
    text = dumps(run(spec))
    if cache is not None:
        cache.put(spec, text)
    return text


# rendering


def _flatten(prefix: str, value, out: list):
    if isinstance(value, dict):
        for k in sorted(value):
            _flatten(f"{prefix}.{k}" if prefix else str(k), value[k], out)
    elif isinstance(value, list) and value and isinstance(value[0], (dict, list)):
        for i, v in enumerate(value):
            _flatten(f"{prefix}[{i}]", v, out)
    else:
        out.append((prefix, json.dumps(value) if isinstance(value, list) else value))


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return dumps(doc)
    result = doc["result"]
    if fmt == "text":
        if "poly" in result:
            s = str(poly_from_payload(result["poly"]))
            if "cutoff" in result:
                s += f" + O(t^{result['cutoff'] + 1})"
            lines = [s]
        elif "count" in result:
            lines = [str(result["count"])]
        else:
            rows: list = []
            _flatten("", result["report"], rows)
            lines = [f"{k}: {v}" for k, v in rows]
        for w in doc.get("witnesses", []):
            lines.append("  ".join(f"{k}={v}" for k, v in w.items()))
        return "\n".join(lines) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if "poly" in result and "terms" not in result["poly"]:
        writer.writerow(["degree", "coefficient"])
        for d, c in sorted(result["poly"].items(), key=lambda kv: int(kv[0])):
            writer.writerow([d, c])
    elif "poly" in result:
        writer.writerow(["exponents", "coefficient"])
        for exps, c in result["poly"]["terms"]:
            writer.writerow([";".join(f"t_{i}^{e}" for i, e in exps.items()), c])
    elif "count" in result:
        writer.writerow(["count"])
        writer.writerow([result["count"]])
    else:
        rows = []
        _flatten("", result["report"], rows)
        writer.writerow(["key", "value"])
        writer.writerows(rows)
    return buf.getvalue()


# argument parsing


def _common(p: argparse.ArgumentParser, rank=True, cutoff=False, nu=False):
    p.add_argument("--lambda", dest="lam", metavar="PARTITION", help="comma separated parts, e.g. 2,1,1")
    if rank:
        p.add_argument("--rank", type=int)
    if cutoff:
        p.add_argument("--cutoff", type=int)
    if nu:
        p.add_argument("--nu", metavar="PARTITION")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--cache-dir", help="result cache directory (default: $GENEXP_CACHE, else no cache)")
    p.add_argument("--refresh", action="store_true", help="recompute and overwrite the cached result")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="genexp", description="Generalized exponents of types A and C.")
    parser.add_argument("--version", action="version", version=f"genexp {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("genexp", help="K_{lambda,0}(t) by crystal combinatorics")
    p.add_argument("kind", choices=("a", "c", "stable-b", "stable-c", "stable-d"))
    _common(p, cutoff=True)
    p.add_argument("--multi", action="store_true", help="multivariable refinement")
    p.add_argument("--witnesses", action="store_true", help="list the tableaux with their charges")

    p = sub.add_parser("oracle", help="alternating-sum t-analogue over the Weyl group")
    p.add_argument("kind", choices=("a", "c"))
    _common(p)
    p.add_argument("--mu", metavar="PARTITION", help="lower weight (default: zero weight)")

    p = sub.add_parser("branch", help="c_nu^lambda(sp_2n) by the three rules")
    _common(p, nu=True)
    p.add_argument("--witnesses", action="store_true")

    p = sub.add_parser("compare", help="trace Sundaram tableaux through companion, R-matrix and evacuation")
    _common(p, nu=True)
    p.add_argument("--all-lr", action="store_true", help="trace every LR tableau, not only Sundaram ones")

    p = sub.add_parser("extremal", help="smallest/largest powers and the minimizing tableau")
    p.add_argument("kind", choices=("min", "max", "sigma"))
    _common(p)

    p = sub.add_parser("verify", help="run an invariant sweep")
    p.add_argument("kind", metavar="suite", choices=sorted(SUITES))
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--cache-dir")
    p.add_argument("--refresh", action="store_true")
    return parser


def spec_from_args(args: argparse.Namespace) -> JobSpec:
    flags = {}
    for name in ("multi", "witnesses", "all_lr"):
        if getattr(args, name, False):
            flags[name] = True
    return JobSpec(
        command=args.command,
        kind=getattr(args, "kind", None),
        lam=_partition(getattr(args, "lam", None), "--lambda"),
        rank=getattr(args, "rank", None),
        cutoff=getattr(args, "cutoff", None),
        nu=_partition(getattr(args, "nu", None), "--nu"),
        mu=_partition(getattr(args, "mu", None), "--mu"),
        flags=flags,
    )


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = spec_from_args(args)
        cache_dir = args.cache_dir or os.environ.get("GENEXP_CACHE")
        cache = Cache(cache_dir) if cache_dir else None
        text = run_cached(spec, cache, refresh=args.refresh)
    except UsageError as exc:
        print(f"genexp: error: {exc}", file=sys.stderr)
        return exc.code
    doc = json.loads(text)
    sys.stdout.write(text if args.format == "json" else render(doc, args.format))
    if spec.command == "verify" and not doc["result"]["report"]["passed"]:
        return EXIT_VERIFY_FAILED
    return 0


if __name__ == "__main__":
    sys.exit(main())
