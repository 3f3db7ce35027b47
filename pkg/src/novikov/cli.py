"""Command-line front end.

Every command builds a report dict; ``--format canonical`` prints it as
canonical JSON, ``--format human`` prints a short summary under a timestamp
header. ``--output FILE`` always saves the canonical report.

Exit codes: 0 ok, 1 a checked claim failed, 2 input error or cap exceeded,
3 only undetermined answers where a determination was requested.
"""

from __future__ import annotations

import argparse
import datetime as _dt
import sys
from pathlib import Path

from . import __version__
from .algebra import Algebra, Identity, check_identity
from .generators import SHIPPED_PROFILE, CorpusEntry, Profile, corpus
from .io import (
    AlgebraFileError,
    algebra_from_dict,
    algebra_to_dict,
    canonical_dumps,
    decode,
    digest,
    encode,
    encode_decision,
    load_algebra,
    loads_json,
    save_algebra,
)
from .lattice import (
    CapExceededError,
    Status,
    baer_radical,
    check_enumeration_caps,
    enumerate_ideals,
    is_prime,
    is_semiprime,
    is_simple,
    minimal_ideals,
    oracle_decisions,
    within_enumeration_caps,
)
from .structure import (
    ann_left,
    ann_right,
    associator_ideal,
    associator_span,
    center,
    commutative_center,
    full_space,
    nucleus,
    square,
)
from .theorems import Coverage, VerdictStatus, run_suite
from .witness import verify_witness

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_UNDETERMINED = 0, 1, 2, 3

CHECK_IDENTITIES = (Identity.RIGHT_SYM, Identity.RIGHT_COMM, Identity.DERIVED3,
                    Identity.ASSOCIATIVITY, Identity.COMMUTATIVITY)
DECIDERS = {"semiprime": is_semiprime, "prime": is_prime, "simple": is_simple}


class InputError(Exception):
    pass


class Run:
    """Collects algebras, results and witnesses for one invocation."""

    def __init__(self, command: str, args: dict, seed: int):
        self.command = command
        self.args = args
        self.seed = seed
        self.algebras: dict[str, dict] = {}
        self.witnesses: list[dict] = []
        self.lines: list[str] = []
        self.input_digest = ""

    def add_algebra(self, a: Algebra) -> str:
        d = algebra_to_dict(a)
        key = digest(d)
        self.algebras[key] = d
        return key

    def witness(self, a: Algebra, source: str, w: dict) -> None:
        self.witnesses.append({"algebra": digest(a), "source": source, "witness": encode(w, a.field)})

    def report(self, results) -> dict:
        return {
            "tool_version": __version__,
            "command": self.command,
            "args": self.args,
            "seed": self.seed,
            "input_digest": self.input_digest,
            "algebras": self.algebras,
            "results": results,
            "witnesses": self.witnesses,
        }


def _sub(a: Algebra, s) -> dict:
    return encode(s, a.field)


def _status_line(label: str, s) -> str:
    return f"{label}: dim {s.dim}"


def load_checked(path, args) -> Algebra:
    a = load_algebra(path)
    check_caps(a, args)
    return a


def check_caps(a: Algebra, args) -> None:
    if args.dim_cap is not None and a.dim > args.dim_cap:
        raise CapExceededError(f"dimension {a.dim} exceeds --dim-cap {args.dim_cap}")
    if args.field_cap is not None and a.field.p is not None and a.field.p > args.field_cap:
        raise CapExceededError(f"characteristic {a.field.p} exceeds --field-cap {args.field_cap}")


# --------------------------------------------------------------------------
# commands


def cmd_check(args, run: Run):
    a = load_checked(args.path, args)
    run.input_digest = run.add_algebra(a)
    reports = {}
    for which in CHECK_IDENTITIES:
        r = check_identity(a, which)
        reports[which.value] = {"holds": r.holds, "witness": list(r.witness) if r.witness else None,
                                "defect": encode(r.defect, a.field) if r.defect else None}
        run.lines.append(f"{which.value}: {'holds' if r.holds else 'fails at ' + str(r.witness)}")
        if not r.holds:
            run.witness(a, f"check:{which.value}", {
                "kind": "identity_defect", "identity": which.value,
                "vectors": [a.basis_vector(i) for i in r.witness], "defect": r.defect})
    novikov = reports["RightSym1"]["holds"] and reports["RightComm2"]["holds"]
    run.lines.insert(0, f"novikov: {str(novikov).lower()}")
    return {"novikov": novikov, "identities": reports}, EXIT_OK if novikov else EXIT_FAIL


def cmd_analyze(args, run: Run):
    a = load_checked(args.path, args)
    run.input_digest = run.add_algebra(a)
    full = full_space(a)
    named = {"A": full, "A^2": square(a, full), "N": nucleus(a),
             "D": associator_ideal(a).space}
    named_defs = {"A": {"op": "full"}, "A^2": {"op": "square", "args": [{"op": "full"}]},
                  "N": {"op": "nucleus"}, "D": {"op": "associator_ideal"}}
    maps = {
        "nucleus": (named["N"], {"op": "nucleus"}),
        "commutative_center": (commutative_center(a), {"op": "commutative_center"}),
        "center": (center(a), {"op": "center"}),
        "associator_span": (associator_span(a), {"op": "associator_span"}),
        "associator_ideal": (named["D"], {"op": "associator_ideal"}),
    }
    for name, s in named.items():
        maps[f"ann_left({name})"] = (ann_left(a, s), {"op": "ann_left", "args": [named_defs[name]]})
        maps[f"ann_right({name})"] = (ann_right(a, s), {"op": "ann_right", "args": [named_defs[name]]})
    results = {}
    for name, (s, expr) in maps.items():
        results[name] = _sub(a, s)
        run.lines.append(_status_line(name, s))
        run.witness(a, f"analyze:{name}", {"kind": "structure_result", "result": s, "result_def": expr})
    return results, EXIT_OK


def _decision_witness(a: Algebra, run: Run, source: str, d, seed: int) -> None:
    run.witness(a, source, {"kind": "decision", "question": d.question,
                            "status": d.status.value, "seed": seed})
    if d.witness:
        w = {k: v for k, v in d.witness.items() if k != "representatives"}
        run.witness(a, source + ":witness", w)


def cmd_decide(args, run: Run):
    a = load_checked(args.path, args)
    run.input_digest = run.add_algebra(a)
    d = DECIDERS[args.question](a, args.seed)
    result = {"decision": encode_decision(d, a.field)}
    run.lines.append(f"{args.question}: {d.status.value} ({d.method.value})")
    _decision_witness(a, run, f"decide:{args.question}", d, args.seed)
    code = EXIT_UNDETERMINED if d.status is Status.UNDETERMINED else EXIT_OK
    if args.oracle and within_enumeration_caps(a.field, a.dim):
        o = oracle_decisions(a)[args.question]
        agree = o.status is d.status
        result["oracle"] = {"status": o.status.value, "agrees": agree}
        run.lines.append(f"oracle: {o.status.value} ({'agrees' if agree else 'DISAGREES'})")
        if not agree:
            code = EXIT_FAIL
    return result, code


def cmd_radical(args, run: Run):
    a = load_checked(args.path, args)
    run.input_digest = run.add_algebra(a)
    chain = baer_radical(a, args.seed)
    stages = [h.space for h in chain.stages]
    from .structure import quotient

    q = quotient(a, chain.radical.space).algebra
    qd = is_semiprime(q, args.seed)
    results = {"stages": [_sub(a, s) for s in stages], "radical": _sub(a, stages[-1]),
               "exact": chain.exact, "quotient_semiprime": qd.status.value}
    run.lines.append(f"radical: dim {stages[-1].dim} after {len(stages) - 1} step(s)")
    run.lines.append(f"quotient semiprime: {qd.status.value}")
    run.witness(a, "radical", {"kind": "baer_chain", "stages": stages, "seed": args.seed})
    if args.oracle and within_enumeration_caps(a.field, a.dim):
        trivial = [h.space for h in enumerate_ideals(a) if square(a, h.space).is_zero()]
        ok = all(s <= stages[-1] for s in trivial)
        results["oracle"] = {"trivial_ideals": len(trivial), "all_contained": ok}
        run.lines.append(f"oracle: {len(trivial)} trivial ideals, all contained: {ok}")
        if not ok:
            return results, EXIT_FAIL
    return results, EXIT_OK if chain.exact else EXIT_UNDETERMINED


def cmd_lattice(args, run: Run):
    a = load_checked(args.path, args)
    check_enumeration_caps(a.field, a.dim)
    run.input_digest = run.add_algebra(a)
    ideals = [h.space for h in enumerate_ideals(a)]
    od = oracle_decisions(a)
    results = {
        "ideals": [_sub(a, s) for s in ideals],
        "count": len(ideals),
        "minimal_ideals": [_sub(a, s) for s in od["minimal_ideals"]],
        **{q: od[q].status.value for q in ("semiprime", "prime", "simple")},
    }
    run.lines.append(f"{len(ideals)} ideals; {len(od['minimal_ideals'])} minimal")
    for q in ("semiprime", "prime", "simple"):
        run.lines.append(f"{q}: {od[q].status.value}")
    run.witness(a, "lattice", {"kind": "ideal_list", "ideals": ideals})
    if args.oracle:
        mins = {h.space for h in minimal_ideals(a, args.seed)}
        agree = mins == set(od["minimal_ideals"]) and all(
            DECIDERS[q](a, args.seed).status is od[q].status for q in DECIDERS)
        results["scan_agrees"] = agree
        run.lines.append(f"projective scan agrees: {agree}")
        if not agree:
            return results, EXIT_FAIL
    return results, EXIT_OK


def _theorem_inputs(args) -> list[CorpusEntry]:
    if args.corpus is not None:
        if args.corpus == "shipped":
            profile = SHIPPED_PROFILE
        else:
            try:
                profile = Profile.from_dict(loads_json(Path(args.corpus).read_text(), args.corpus))
            except (OSError, TypeError) as e:
                raise InputError(f"{args.corpus}: cannot read profile: {e}") from None
        return corpus(profile)
    if args.path is None:
        raise InputError("theorems needs a PATH or --corpus")
    path = Path(args.path)
    if path.is_file():
        return [CorpusEntry(path.stem, load_algebra(path))]
    if not path.is_dir():
        raise InputError(f"{path}: no such file or directory")
    manifest = path / "manifest.json"
    if manifest.exists():
        m = loads_json(manifest.read_text(), str(manifest))
        return [CorpusEntry(e["name"], load_algebra(path / e["file"]), e.get("negative", False))
                for e in m["algebras"]]
    return [CorpusEntry(p.stem, load_algebra(p)) for p in sorted(path.glob("*.json"))]


def cmd_theorems(args, run: Run):
    entries = _theorem_inputs(args)
    cov = Coverage()
    per_algebra, skipped = [], []
    digests = []
    for e in entries:
        check_caps(e.algebra, args)
        if e.negative:
            skipped.append(e.name)
            continue
        key = run.add_algebra(e.algebra)
        digests.append(key)
        verdicts = run_suite(e.algebra, args.seed)
        cov.add(verdicts, e.algebra.field.is_finite)
        per_algebra.append({
            "name": e.name, "algebra": key,
            "verdicts": {v.claim.value: {"status": v.status.value, "instances": v.instances,
                                         "context": v.context} for v in verdicts},
        })
        for v in verdicts:
            if v.status is VerdictStatus.FAILS:
                run.witness(e.algebra, f"theorems:{e.name}:{v.claim.value}", v.witness)
                run.lines.append(f"FAIL {v.claim.value} on {e.name}: {v.context}")
    run.input_digest = digest(digests)
    run.lines.append(f"{len(per_algebra)} algebras checked, {len(skipped)} negative entries skipped")
    for claim, c in cov.counts.items():
        run.lines.append(f"{claim:18s} holds {c['Holds']:3d}  fails {c['Fails']}  vacuous {c['Vacuous']:3d}"
                         f"  undetermined {c['Undetermined']:3d}  nonvacuous(finite) {c['nonvacuous_finite']}")
    results = {"algebras": per_algebra, "coverage": cov.counts, "fails": cov.fails,
               "skipped_negative": skipped}
    return results, EXIT_FAIL if cov.fails else EXIT_OK


def cmd_generate(args, run: Run):
    if args.profile == "shipped":
        profile = SHIPPED_PROFILE
    else:
        try:
            profile = Profile.from_dict(loads_json(Path(args.profile).read_text(), args.profile))
        except (OSError, TypeError) as e:
            raise InputError(f"{args.profile}: cannot read profile: {e}") from None
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    listing = []
    for e in corpus(profile):
        check_caps(e.algebra, args)
        fname = f"{e.name}.json"
        save_algebra(e.algebra, out / fname)
        listing.append({"name": e.name, "file": fname, "digest": digest(e.algebra),
                        "negative": e.negative, "provenance": e.provenance})
    manifest = {"profile": profile.to_dict(), "algebras": listing}
    (out / "manifest.json").write_text(canonical_dumps(manifest) + "\n", encoding="utf-8")
    run.input_digest = digest(manifest)
    run.lines.append(f"wrote {len(listing)} algebras to {out}")
    return {"count": len(listing), "manifest_digest": digest(manifest)}, EXIT_OK


def verify_report(report: dict) -> list[tuple[str, bool, str]]:
    """Re-verify every witness of a report using only the report itself."""
    out = []
    algebras = {}
    for key, d in report.get("algebras", {}).items():
        a = algebra_from_dict(d, f"algebras.{key[:12]}")
        if digest(a) != key:
            raise AlgebraFileError(f"algebras.{key[:12]}: digest mismatch")
        algebras[key] = a
    for k, entry in enumerate(report.get("witnesses", [])):
        a = algebras.get(entry.get("algebra"))
        if a is None:
            out.append((entry.get("source", str(k)), False, "unknown algebra digest"))
            continue
        try:
            w = decode(entry["witness"], a.field)
        except (AlgebraFileError, ValueError, KeyError, TypeError) as e:
            out.append((entry.get("source", str(k)), False, f"malformed witness: {e}"))
            continue
        ok, msg = verify_witness(a, w)
        out.append((entry.get("source", str(k)), ok, msg))
    return out


def cmd_verify_witness(args, run: Run):
    path = Path(args.report)
    try:
        report = loads_json(path.read_text(encoding="utf-8"), str(path))
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from None
    if not isinstance(report, dict) or "witnesses" not in report:
        raise InputError(f"{path}: not a report (no 'witnesses')")
    checked = verify_report(report)
    run.input_digest = digest(report)
    for source, ok, msg in checked:
        run.lines.append(f"{'ok ' if ok else 'BAD'} {source}: {msg}")
    run.lines.append(f"{sum(ok for _, ok, _ in checked)}/{len(checked)} witnesses verified")
    results = {"verified": [{"source": s, "ok": ok, "message": m} for s, ok, m in checked]}
    return results, EXIT_OK if all(ok for _, ok, _ in checked) else EXIT_FAIL


COMMANDS = {
    "check": cmd_check, "analyze": cmd_analyze, "decide": cmd_decide, "radical": cmd_radical,
    "lattice": cmd_lattice, "theorems": cmd_theorems, "generate": cmd_generate,
    "verify-witness": cmd_verify_witness,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field-cap", type=int, default=None, help="largest accepted characteristic p")
    common.add_argument("--dim-cap", type=int, default=64, help="largest accepted dimension")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized searches over Q")
    common.add_argument("--format", choices=("human", "canonical"), default="human")
    common.add_argument("--oracle", action="store_true", help="cross-check against full ideal enumeration")
    common.add_argument("--output", help="also write the canonical report to this file")

    p = argparse.ArgumentParser(prog="novikov", description="Exact analysis of Novikov algebras.")
    p.add_argument("--version", action="version", version=f"novikov {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("check", parents=[common], help="check the defining identities").add_argument("path")
    sub.add_parser("analyze", parents=[common], help="nucleus, centers, D(A), annihilators").add_argument("path")
    d = sub.add_parser("decide", parents=[common], help="semiprime / prime / simple")
    d.add_argument("question", choices=sorted(DECIDERS))
    d.add_argument("path")
    sub.add_parser("radical", parents=[common], help="Baer radical chain").add_argument("path")
    sub.add_parser("lattice", parents=[common], help="enumerate all ideals (small finite fields)").add_argument("path")
    t = sub.add_parser("theorems", parents=[common], help="run the theorem suite")
    t.add_argument("path", nargs="?", help="algebra file or corpus directory")
    t.add_argument("--corpus", help='"shipped" or a profile JSON file')
    g = sub.add_parser("generate", parents=[common], help="emit a corpus directory")
    g.add_argument("profile", help='"shipped" or a profile JSON file')
    g.add_argument("out_dir")
    sub.add_parser("verify-witness", parents=[common], help="re-verify a report's witnesses").add_argument("report")
    return p


def _args_record(ns) -> dict:
    skip = {"format", "output", "command"}
    return {k: v for k, v in sorted(vars(ns).items()) if k not in skip}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    run = Run(args.command, _args_record(args), args.seed)
    try:
        results, code = COMMANDS[args.command](args, run)
    except (AlgebraFileError, InputError) as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceededError as e:
        print(f"cap exceeded: {e}", file=sys.stderr)
        return EXIT_INPUT
    report = run.report(results)
    text = canonical_dumps(report)
    if args.output:
        Path(args.output).write_text(text + "\n", encoding="utf-8")
    if args.format == "canonical":
        print(text)
    else:
        stamp = _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")
        print(f"# novikov {__version__} {args.command} at {stamp}")
        for line in run.lines:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
