#!/usr/bin/env python3
"""Regenerate docs/closed_form_audit.md.

Measures how far the published closed-form concurrence expressions sit from
the operator-sum oracle on the Bell preset, for every application mode and
sign convention, and records the structural evidence that the printed
expressions are internally defective. The oracle pipeline is ground truth.
"""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from unruhlab.validation import closed_form_deltas  # noqa: E402

HEADER = """\
# Closed-form concurrence audit

The library carries two routes to the concurrence of the evolved state:

1. the **operator-sum oracle**: frame transformation, Kraus application,
   Wootters/X-form concurrence of the resulting matrix;
2. the **closed-form expressions** in `unruhlab.concurrence
   .closed_form_concurrence`, transcribed verbatim from their published
   source.

They do not agree. The table below gives the worst-case distance on an
11 x 11 x 9 grid over (p, mu, r) for the Bell preset, per channel, per
application mode (`single` = one correlated pair use, `double` = independent
per-qubit streaming) and per sign convention fed to the closed form
(`magnitudes` substitutes |c_i|, `signed` uses the preset's signed
coefficients). Acceptance required 1e-9 in at least one mode; no combination
comes anywhere near, so the discrepancies themselves are the documented
result and the oracle is ground truth everywhere else in the package.

## Worst-case distances (Bell preset)

| channel | mode | convention | max \\|closed - oracle\\| | argmax (p, mu, r) | domain errors |
|---------|------|------------|------------------------|-------------------|---------------|
"""

EVIDENCE = """
## Why the printed expressions cannot match any CPTP pipeline

The deviations are structural, not a convention mismatch:

* **Inherited frame-matrix typo.** The published frame-transformed matrix
  repeats its (2,2) diagonal entry in the (4,4) slot, which already breaks
  unit trace; this library derives the (4,4) entry from first principles
  (and the explicit three-wedge construction confirms it to 1e-12). At p = 0
  the amplitude-damping expression reproduces sqrt(rho11 rho22) where the
  X-form concurrence needs sqrt(rho11 rho44) - exactly the defect that typo
  produces downstream.
* **Inconsistent prefactors.** At mu = r = 0 (the standard memoryless
  limit) the amplitude-damping expression evaluates to (1-p)/2 for the Bell
  family where the honest value is 1-p, while the bit-flip expression
  evaluates to 2(1 - 2p(1-p)) - sqrt(p(1-p)), i.e. 2 at p = 0 where a
  concurrence must be 1. One coherence term is half the correct weight, the
  other double.
* **Missing memory dependence.** The bit-flip expression's diagonal term
  carries no mu at all, while the diagonal entries of the correlated
  channel's output are manifestly mu-dependent.
* **Depolarizing positivity.** The depolarizing expression stays positive
  at (mu = 0.25, p = 1), where the true output state
  0.75 I/4 + 0.25 (Bell) is separable (Bell weight below the 1/3
  threshold). The published "no sudden death for any mu > 0" claim is a
  property of the defective expression, not of the channel; the honest
  boundary at mu = 0.5, r = pi/4 sits at p = 0.8048.

The transcriptions themselves are verified against independent hand-derived
limit values (see tests/test_concurrence.py::TestClosedFormTranscription),
so the distances above measure the published expressions, not transcription
noise. The `single` correlated mode is the canonical application everywhere
else in the package; `double` ignores mu by construction, which is why its
deltas blow up to 1.0 at strong memory.
"""


def main() -> int:
    lines = [HEADER]
    for rec in closed_form_deltas():
        arg = rec["argmax"]
        at = f"({arg[0]:.2f}, {arg[1]:.2f}, {arg[2]:.3f})" if arg else "n/a"
        name = {
            "ad": "amplitude damping",
            "dep": "depolarizing",
            "bf": "bit flip",
        }[rec["channel"]]
        lines.append(
            f"| {name} | {rec['mode']} | {rec['convention']} "
            f"| {rec['max_delta']:.4f} | {at} | {rec['domain_errors']} |\n"
        )
    lines.append(EVIDENCE)
    out = ROOT / "docs" / "closed_form_audit.md"
    out.write_text("".join(lines), encoding="utf-8")
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
