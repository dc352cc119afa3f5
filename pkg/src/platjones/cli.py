"""Command-line front end.

Subcommands: eval (reconstruct the Jones polynomial), prob (acceptance
probability at a root of unity), oracle (exact skein computation),
verify (cross-check the pipeline against the oracle on a corpus or on
seeded random words).

Exit codes: 2 word syntax, 3 cap/orientation failure, 4 fit failure,
5 degenerate or too-large theta, 6 crossing limit.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import random
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .braid import BraidWord, format_word, parse, resolve_orientations, writhe
from .errors import (
    AnnotationConflict,
    CapMismatch,
    DegenerateQ,
    IllConditioned,
    NegativeRadicand,
    NonAdmissibleTriple,
    ResidualTooLarge,
    TooManyCrossings,
    WordSyntaxError,
)
from .evaluator import (
    admissible_arc,
    compile as compile_word,
    convention_factor,
    evaluate,
    jones,
    mirror_symmetry_check,
    unlink_normalization,
)
from .laurent import LaurentPoly, laurent_eval, render_q
from .oracle import (
    bracket_span,
    kauffman_bracket,
    plat_diagram,
    writhe_correction,
)
from .qnum import QPoint
from .qsim import p_k as qsim_p_k, run as qsim_run

MIRROR_TOL = 1e-10
QSIM_TOL = 1e-12


@dataclass(frozen=True)
class RunConfig:
    tolerance: float = 1e-6
    samples: int = 64
    root_order: Optional[int] = None
    window: Optional[tuple[int, int]] = None
    flips: Optional[str] = None

    def validate(self) -> None:
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")
        if self.samples < 16:
            raise ValueError("samples must be at least 16")
        if self.root_order is not None and self.root_order < 5:
            # q-numbers up to [n+1] must stay positive; below the fifth
            # root even the two-strand build degenerates
            raise NegativeRadicand(
                f"root order {self.root_order} is too small; need at least 5"
            )


def _config(args) -> RunConfig:
    cfg = RunConfig(
        tolerance=getattr(args, "tolerance", 1e-6),
        samples=getattr(args, "samples", 64),
        root_order=getattr(args, "root_order", None),
        window=tuple(args.window) if getattr(args, "window", None) else None,
        flips=getattr(args, "flips", None),
    )
    cfg.validate()
    return cfg


def _load_word(args, config: RunConfig) -> BraidWord:
    text = Path(args.word_file).read_text()
    word = parse(text)
    if config.flips is not None:
        bits = config.flips
        if len(bits) != word.n or any(ch not in "01" for ch in bits):
            raise WordSyntaxError(
                f"flips must be a bitstring of length {word.n}", 1, 1
            )
        word = dataclasses.replace(
            word, flips=tuple(ch == "1" for ch in bits)
        )
    return word


def _poly_payload(p: Optional[LaurentPoly]):
    if p is None:
        return None
    coeffs = {}
    for k, v in p.coeffs().items():
        coeffs[str(k)] = int(v) if v.denominator == 1 else float(v)
    return {"coeffs": coeffs}


def _report(
    word: str,
    n: int,
    polynomial: Optional[LaurentPoly] = None,
    residual: Optional[float] = None,
    operator_count: Optional[int] = None,
    p_k: Optional[float] = None,
    im_amplitude: Optional[float] = None,
    oracle_polynomial: Optional[LaurentPoly] = None,
    deviations: Optional[dict] = None,
) -> dict:
    return {
        "word": word,
        "n": n,
        "polynomial": _poly_payload(polynomial),
        "residual": residual,
        "operator_count": operator_count,
        "p_k": p_k,
        "im_amplitude": im_amplitude,
        "oracle_polynomial": _poly_payload(oracle_polynomial),
        "deviations": deviations,
    }


def _emit(args, report, lines) -> None:
    if args.json:
        sys.stdout.write(
            json.dumps(report, sort_keys=True, separators=(",", ":")) + "\n"
        )
    else:
        for ln in lines:
            print(ln)


def _theta_points(n: int, count: int) -> list[float]:
    lo, hi = admissible_arc(n)
    span = hi - lo
    if count == 1:
        return [lo + 0.5 * span]
    return [
        lo + span * (0.05 + 0.9 * j / (count - 1)) for j in range(count)
    ]


def cmd_eval(args) -> int:
    config = _config(args)
    word = _load_word(args, config)
    annotated, cap = resolve_orientations(word)
    result = jones(
        word,
        samples=config.samples,
        degree_window=config.window,
        tolerance=config.tolerance,
    )
    w = writhe(annotated)
    exact = None
    factor = None
    if annotated.crossing_count() <= args.max_crossings:
        diagram = plat_diagram(word)
        exact = writhe_correction(
            kauffman_bracket(diagram, max_crossings=args.max_crossings), w
        )
        factor = convention_factor(result.polynomial, exact)
    deviations = {"rounding_shift": result.max_shift}
    report = _report(
        word=format_word(word),
        n=result.n,
        polynomial=result.polynomial,
        residual=result.residual,
        operator_count=result.operator_count,
        oracle_polynomial=exact,
        deviations=deviations,
    )
    flips = "".join("1" if b else "0" for b in cap.flips)
    lines = [
        f"word: {format_word(word)}",
        f"resolved: {format_word(annotated)} [flips={flips}]",
        f"n: {result.n}  writhe: {w:+d}",
        f"operators ({result.operator_count}): "
        + " ".join(compile_word(annotated).tokens()),
        f"window: [{result.window[0]}, {result.window[1]}]",
        f"normalization: {result.normalization}",
        f"polynomial: {render_q(result.polynomial)}",
        f"residual: {result.residual:.3e}  rounding shift: {result.max_shift:.3e}",
    ]
    if exact is not None:
        lines.append(f"oracle (t=q): {render_q(exact, 't')}")
        if factor is not None:
            c, s = factor
            sign = "+" if c > 0 else "-"
            lines.append(
                f"convention factor: {sign}q^{{{s}/4}} "
                "(polynomial = factor * oracle)"
            )
        else:
            lines.append("convention factor: none found")
    else:
        lines.append("oracle: skipped (crossing limit)")
    _emit(args, report, lines)
    return 0


def cmd_prob(args) -> int:
    config = _config(args)
    word = _load_word(args, config)
    if config.root_order is not None:
        theta = 2.0 * math.pi / config.root_order
        theta_label = f"2*pi/{config.root_order}"
    else:
        theta = args.theta
        theta_label = f"{theta!r}"
    annotated, _ = resolve_orientations(word)
    program = compile_word(annotated)
    state = qsim_run(word, theta)
    amp = complex(state.amplitudes[0])
    pk = abs(amp) ** 2
    report = _report(
        word=format_word(word),
        n=word.n,
        operator_count=program.operator_count,
        p_k=pk,
        im_amplitude=amp.imag,
    )
    lines = [
        f"word: {format_word(word)}",
        f"theta: {theta_label} = {theta:.12f}",
        f"operators ({program.operator_count}): " + " ".join(program.tokens()),
        f"amplitude: {amp.real:.15g} {amp.imag:+.15g}i",
        f"P_K: {pk:.15g}",
        f"|Im amplitude|: {abs(amp.imag):.3e}",
    ]
    _emit(args, report, lines)
    return 0


def cmd_oracle(args) -> int:
    config = _config(args)
    word = _load_word(args, config)
    diagram = plat_diagram(word)
    bracket = kauffman_bracket(diagram, max_crossings=args.max_crossings)
    w = writhe(diagram.word)
    poly = writhe_correction(bracket, w)
    span = bracket_span(bracket)
    report = _report(
        word=format_word(word),
        n=word.n,
        oracle_polynomial=poly,
    )
    lines = [
        f"word: {format_word(word)}",
        f"n: {word.n}  crossings: {diagram.crossing_count}  writhe: {w:+d}",
        f"bracket span (A-exponents): [{span[0]}, {span[1]}]",
        f"jones (t): {render_q(poly, 't')}",
    ]
    _emit(args, report, lines)
    return 0


def _random_words(count: int, seed: int) -> list[tuple[str, BraidWord]]:
    """Seeded cap-valid sample with a bounded state sum per word."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.choice([2, 3])
        length = rng.randint(1, 5)
        syllables = []
        for _ in range(length):
            idx = rng.randint(1, 2 * n - 1)
            k = rng.choice([-3, -2, -1, 1, 2, 3])
            syllables.append(f"g{idx}^{k}")
        text = f"strands={2 * n}; " + " ".join(syllables)
        word = parse(text)
        if word.crossing_count() > 10:
            continue
        try:
            resolve_orientations(word)
        except (CapMismatch, AnnotationConflict):
            continue
        out.append((f"random-{len(out)}", word))
    return out


def _corpus_words(path: Path) -> list[tuple[str, BraidWord]]:
    files = sorted(path.glob("*.txt"))
    return [(f.name, parse(f.read_text())) for f in files]


def _verify_case(name: str, word: BraidWord, config: RunConfig) -> dict:
    annotated, _ = resolve_orientations(word)
    program = compile_word(annotated)
    n = word.n
    diagram = plat_diagram(word)
    bracket = kauffman_bracket(diagram, max_crossings=20)
    exact = writhe_correction(bracket, writhe(diagram.word))
    thetas = _theta_points(n, 10)
    worst_mod = 0.0
    worst_mirror = 0.0
    # polynomial roots can land on sample phases; floor the relative
    # scale by the coefficient mass so a true zero does not divide out
    floor = 1e-9 * max(
        1.0, float(sum(abs(v) for v in exact.coeffs().values()))
    )
    for theta in thetas:
        point = QPoint(theta)
        got = abs(evaluate(word, theta)) * abs(unlink_normalization(n, theta))
        want = abs(laurent_eval(exact, point))
        scale = max(want, floor)
        worst_mod = max(worst_mod, abs(got - want) / scale)
        worst_mirror = max(worst_mirror, mirror_symmetry_check(word, theta))
    mid_theta = thetas[len(thetas) // 2]
    qsim_dev = abs(
        qsim_p_k(word, mid_theta) - abs(evaluate(word, mid_theta)) ** 2
    )
    ok = (
        worst_mod < config.tolerance
        and worst_mirror < MIRROR_TOL
        and qsim_dev < QSIM_TOL
    )
    deviations = {
        "modulus_rel": worst_mod,
        "mirror": worst_mirror,
        "qsim": qsim_dev,
    }
    return {
        "name": name,
        "pass": ok,
        "tokens": " ".join(program.tokens()),
        "report": _report(
            word=format_word(word),
            n=n,
            operator_count=program.operator_count,
            oracle_polynomial=exact,
            deviations=deviations,
        ),
    }


def cmd_verify(args) -> int:
    config = _config(args)
    if args.random is not None:
        seed = args.seed if args.seed is not None else 0
        cases = _random_words(args.random, seed)
        source = f"random({args.random}, seed={seed})"
    elif args.corpus is not None:
        seed = None
        cases = _corpus_words(Path(args.corpus))
        source = f"corpus({args.corpus})"
    else:
        print("error: verify needs a corpus directory or --random N", file=sys.stderr)
        return 2
    results = [_verify_case(name, word, config) for name, word in cases]
    all_pass = all(r["pass"] for r in results)
    worst = {
        key: max((r["report"]["deviations"][key] for r in results), default=0.0)
        for key in ("modulus_rel", "mirror", "qsim")
    }
    if args.json:
        payload = {
            "source": source,
            "seed": seed,
            "cases": results,
            "worst": worst,
            "passed": all_pass,
        }
        sys.stdout.write(
            json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"
        )
    else:
        print(f"verify {source}: {len(results)} case(s)")
        for i, r in enumerate(results):
            status = "PASS" if r["pass"] else "FAIL"
            dev = r["report"]["deviations"]
            print(
                f"  [{i:3d}] {status} {r['report']['word']}\n"
                f"        operators: {r['tokens']}\n"
                f"        modulus {dev['modulus_rel']:.2e}"
                f"  mirror {dev['mirror']:.2e}"
                f"  qsim {dev['qsim']:.2e}"
            )
        print(
            "worst: modulus {modulus_rel:.2e}  mirror {mirror:.2e}"
            "  qsim {qsim:.2e}".format(**worst)
        )
        print("result:", "PASS" if all_pass else "FAIL")
    return 0 if all_pass else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="platjones",
        description="Jones polynomials of plat closures via a unitary "
        "braid representation, with an exact skein oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="reconstruct the Jones polynomial")
    pe.add_argument("word_file", help="file containing one braid word")
    pe.add_argument("--samples", type=int, default=64)
    pe.add_argument(
        "--window", nargs=2, type=int, metavar=("DMIN", "DMAX"),
        help="exponent window override in x = q^{1/2}",
    )
    pe.add_argument("--tolerance", type=float, default=1e-6)
    pe.add_argument("--flips", help="cup orientation bits, overrides the word")
    pe.add_argument("--max-crossings", type=int, default=20)
    pe.add_argument("--json", action="store_true")
    pe.set_defaults(func=cmd_eval)

    pp = sub.add_parser("prob", help="acceptance probability at one phase")
    pp.add_argument("word_file")
    grp = pp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--root-order", type=int, help="theta = 2*pi/r")
    grp.add_argument("--theta", type=float)
    pp.add_argument("--flips")
    pp.add_argument("--json", action="store_true")
    pp.set_defaults(func=cmd_prob)

    po = sub.add_parser("oracle", help="exact Kauffman-bracket Jones polynomial")
    po.add_argument("word_file")
    po.add_argument("--max-crossings", type=int, default=20)
    po.add_argument("--flips")
    po.add_argument("--json", action="store_true")
    po.set_defaults(func=cmd_oracle)

    pv = sub.add_parser("verify", help="cross-check evaluator, simulator and oracle")
    pv.add_argument("corpus", nargs="?", help="directory of *.txt word files")
    pv.add_argument("--random", type=int, metavar="N")
    pv.add_argument("--seed", type=int)
    pv.add_argument("--tolerance", type=float, default=1e-6)
    pv.add_argument("--json", action="store_true")
    pv.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except WordSyntaxError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (CapMismatch, AnnotationConflict) as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except (ResidualTooLarge, IllConditioned) as e:
        print(f"error: {e}", file=sys.stderr)
        return 4
    except (NegativeRadicand, DegenerateQ, NonAdmissibleTriple) as e:
        print(f"error: {e}", file=sys.stderr)
        return 5
    except TooManyCrossings as e:
        print(f"error: {e}", file=sys.stderr)
        return 6
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
