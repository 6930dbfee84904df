"""Command-line front end.

Every command writes a JSON report (stdout or ``--out``). Exit status is 0 on
success, 1 when a checked identity or contract fails, 2 on usage errors.
"""

import argparse
import json
import sys

import numpy as np

from . import closure as closure_mod
from . import processor, synthesis
from .errors import NotCompilableError, ProgramSyntaxError, WeylGateError
from .matrix import matrix_from_dict
from .suite import DEFAULT_CHECK_TOL, generator_family, identity_suite

SCHEMA = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _family_args(p, use_default="raw"):
    p.add_argument("--family", choices=["clifford", "weyl"], required=True)
    p.add_argument("--n", type=int, default=1, help="number of qubits or qudits")
    p.add_argument("--d", type=int, default=None, help="qudit dimension (weyl only)")
    p.add_argument("--use", choices=["raw", "tpm", "two-gate"], default=use_default)


def _common_args(p):
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=DEFAULT_CHECK_TOL)
    p.add_argument("--out", default=None, help="write the report here instead of stdout")


def build_parser():
    parser = argparse.ArgumentParser(prog="weylgate", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gens", help="export a generator family as JSON")
    _family_args(p)
    _common_args(p)

    p = sub.add_parser("verify", help="check every defining identity of a family")
    _family_args(p)
    _common_args(p)

    p = sub.add_parser("closure", help="Lie closure dimension and universality")
    _family_args(p)
    _common_args(p)
    p.add_argument("--mode", choices=["projective", "full"], default="projective")

    p = sub.add_parser("compile", help="compile a unitary into generator exponentials")
    _family_args(p, use_default=None)
    _common_args(p)
    p.add_argument("--target", required=True, help="matrix JSON file")
    p.add_argument("--epsilon", type=float, default=0.1)
    p.add_argument("--max-steps", type=int, default=synthesis.DEFAULT_MAX_STEPS)

    p = sub.add_parser("processor", help="deterministic processor simulation")
    psub = p.add_subparsers(dest="action", required=True)
    r = psub.add_parser("run", help="run a program on a data state")
    r.add_argument("--program", required=True, help="program source file")
    r.add_argument("--table", required=True, help="gate table JSON file")
    r.add_argument("--input", required=True, help="data state JSON file")
    r.add_argument("--superpose", default=None, metavar="j,k,alpha,beta")
    _common_args(r)
    return parser


def _family_header(args):
    return {"schema": SCHEMA, "command": args.command, "family": args.family,
            "n": args.n, "d": args.d, "use": args.use}


def _gens(args):
    return generator_family(args.family, args.n, args.d, args.use)


def cmd_gens(args):
    gens = _gens(args)
    report = _family_header(args)
    report["generators"] = gens.to_json()
    return report, True


def cmd_verify(args):
    checks = identity_suite(args.family, args.n, args.d, seed=args.seed, tol=args.tol)
    report = _family_header(args)
    report["seed"] = args.seed
    report["checks"] = checks
    report["passed"] = all(c["passed"] for c in checks)
    report["failed"] = [c["equation"] for c in checks if not c["passed"]]
    return report, report["passed"]


def closure_contract(result):
    """Largest deviations from orthonormality and from closure under brackets."""
    q = result.basis_array()
    ortho = float(np.max(np.abs(q @ q.T - np.eye(len(q))))) if len(q) else 0.0
    worst = 0.0
    basis = result.basis
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            c = basis[i] @ basis[j] - basis[j] @ basis[i]
            worst = max(worst, closure_mod.express_in_closure(c, result).residual)
    return ortho, worst


def cmd_closure(args):
    gens = _gens(args)
    result = closure_mod.lie_closure(gens)
    ortho, resid = closure_contract(result)
    report = _family_header(args)
    report.update(result.report(args.mode))
    report["orthonormality_error"] = ortho
    report["closure_residual"] = resid
    report["max_locality"] = gens.max_locality()
    ok = ortho <= 1e-9 and resid <= 1e-7
    return report, ok


def cmd_compile(args):
    if args.use is None:
        args.use = "two-gate" if args.family == "clifford" else "tpm"
    gens = _gens(args)
    with open(args.target, encoding="utf-8") as fh:
        target = matrix_from_dict(json.load(fh))
    result = closure_mod.lie_closure(gens)
    rng = np.random.default_rng(args.seed)
    rep = synthesis.compile_unitary(target, gens, result, args.epsilon,
                                    max_steps=args.max_steps, rng=rng)
    report = _family_header(args)
    report.update(rep.to_json())
    return report, rep.converged


def _load_vector(path):
    with open(path, encoding="utf-8") as fh:
        obj = json.load(fh)
    re_ = np.asarray(obj["re"], dtype=float)
    im = np.asarray(obj.get("im", np.zeros_like(re_)), dtype=float)
    return re_ + 1j * im


def _parse_superpose(text):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise UsageError("--superpose expects j,k,alpha,beta")
    try:
        return parts[0], parts[1], complex(parts[2]), complex(parts[3])
    except ValueError:
        raise UsageError("--superpose amplitudes must be numbers") from None


def cmd_processor(args):
    with open(args.program, encoding="utf-8") as fh:
        program = processor.parse_program(fh.read())
    with open(args.table, encoding="utf-8") as fh:
        raw_table = json.load(fh)
    table = processor.GateTable({k: matrix_from_dict(v) for k, v in raw_table.items()})
    psi = _load_vector(args.input)
    out = processor.run(program, table, psi)
    expected = processor.direct_product(program, table) @ psi
    deviation = float(np.max(np.abs(out - expected))) if out.size else 0.0
    report = {
        "schema": SCHEMA,
        "command": "processor run",
        "program": processor.format_program(program),
        "tape_length": program.tape_length(),
        "state": {"re": [float(x) for x in out.real], "im": [float(x) for x in out.imag]},
        "direct_product_deviation": deviation,
    }
    if args.superpose:
        j, k, alpha, beta = _parse_superpose(args.superpose)
        report["superposition"] = {
            "j": j, "k": k, "alpha": [alpha.real, alpha.imag], "beta": [beta.real, beta.imag],
            "entropy_bits": processor.superposition_malfunction(table, j, k, alpha, beta, psi),
        }
    return report, deviation <= 1e-9


COMMANDS = {
    "gens": cmd_gens,
    "verify": cmd_verify,
    "closure": cmd_closure,
    "compile": cmd_compile,
    "processor": cmd_processor,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        report, ok = COMMANDS[args.command](args)
    except (UsageError, ProgramSyntaxError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"weylgate: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotCompilableError as exc:
        print(f"weylgate: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except WeylGateError as exc:
        print(f"weylgate: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if not ok:
        failed = report.get("failed")
        if failed:
            print(f"weylgate: failed checks: {', '.join(failed)}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
