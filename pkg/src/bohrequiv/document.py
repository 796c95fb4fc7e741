"""JSON sum documents.

A document describes one exponential sum::

    {
      "generators":   [{"symbol": "1", "value": "1"},
                       {"symbol": "r2", "value": "1.41421356237309504880"}],
      "precision":    64,
      "frequencies":  [["1", "0"], ["0", "1"], ["1/2", "1"]],
      "coefficients": [{"modulus": "1", "phase_turns": "0"},
                       {"modulus": "2", "phase_turns": "1/4"},
                       {"modulus": "1/3", "phase_turns": "1/2"}],
      "strip":        {"alpha": "-inf", "beta": "+inf"}
    }

Rationals are ``"p/q"`` strings. Numeric coefficients use ``{"re": ..., "im": ...}``
with decimal strings. ``precision`` and ``strip`` are optional.
"""

import json
import math
from fractions import Fraction

from .errors import BohrEquivError, DocumentError
from .exponents import DEFAULT_PRECISION, ExponentSet, Frequency, GroundGeneratorSet
from .sums import ExactPolar, ExponentialSum, NumericComplex

__all__ = ["parse_document", "serialize_sum", "load_sum", "dump_sum", "format_rational"]


def format_rational(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _rational(value, path):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise DocumentError(path, f"expected a rational string, got {value!r}")
    try:
        return Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError):
        raise DocumentError(path, f"not a rational: {value!r}") from None


def _real(value, path):
    if isinstance(value, bool):
        raise DocumentError(path, "expected a number")
    text = str(value).strip().lower()
    if text in ("-inf", "+inf", "inf"):
        return -math.inf if text.startswith("-") else math.inf
    try:
        x = float(text)
    except ValueError:
        raise DocumentError(path, f"not a decimal number: {value!r}") from None
    if not math.isfinite(x):
        raise DocumentError(path, f"not finite: {value!r}")
    return x


def _require(obj, key, path, kind):
    if not isinstance(obj, dict) or key not in obj:
        raise DocumentError(path, f"missing field {key!r}")
    val = obj[key]
    if not isinstance(val, kind):
        raise DocumentError(f"{path}.{key}", f"expected {kind.__name__}")
    return val


def parse_document(doc):
    """Build an ``ExponentialSum`` from a decoded JSON document."""
    if not isinstance(doc, dict):
        raise DocumentError("$", "document must be an object")
    gens_raw = _require(doc, "generators", "$", list)
    entries = []
    for i, g in enumerate(gens_raw):
        p = f"$.generators[{i}]"
        sym = _require(g, "symbol", p, str)
        val = _require(g, "value", p, str)
        entries.append((sym, val))
    precision = doc.get("precision", DEFAULT_PRECISION)
    if not isinstance(precision, int) or isinstance(precision, bool) or precision < 8:
        raise DocumentError("$.precision", "expected an integer >= 8")
    try:
        gens = GroundGeneratorSet(tuple(entries), precision)
    except (ValueError, TypeError) as exc:
        raise DocumentError("$.generators", str(exc)) from None

    freqs = []
    for j, row in enumerate(_require(doc, "frequencies", "$", list)):
        p = f"$.frequencies[{j}]"
        if not isinstance(row, list) or len(row) != len(gens):
            raise DocumentError(p, f"expected a list of {len(gens)} rationals")
        coords = tuple(_rational(v, f"{p}[{k}]") for k, v in enumerate(row))
        freqs.append(Frequency(coords, gens))
    try:
        exponents = ExponentSet(tuple(freqs))
    except ValueError as exc:
        raise DocumentError("$.frequencies", str(exc)) from None

    coeffs = []
    for j, c in enumerate(_require(doc, "coefficients", "$", list)):
        p = f"$.coefficients[{j}]"
        if not isinstance(c, dict):
            raise DocumentError(p, "expected an object")
        if "modulus" in c:
            mod = _rational(c["modulus"], f"{p}.modulus")
            phase = _rational(c.get("phase_turns", "0"), f"{p}.phase_turns")
            if mod < 0:
                raise DocumentError(f"{p}.modulus", "must be nonnegative")
            if not 0 <= phase < 1:
                raise DocumentError(f"{p}.phase_turns", "must lie in [0, 1)")
            coeffs.append(ExactPolar(mod, phase))
        elif "re" in c:
            coeffs.append(NumericComplex(_real(c["re"], f"{p}.re"),
                                         _real(c.get("im", "0"), f"{p}.im")))
        else:
            raise DocumentError(p, "needs either modulus/phase_turns or re/im")

    strip = None
    if doc.get("strip") is not None:
        s = doc["strip"]
        strip = (_real(_require(s, "alpha", "$.strip", (str, int, float)), "$.strip.alpha"),
                 _real(_require(s, "beta", "$.strip", (str, int, float)), "$.strip.beta"))
        if not strip[0] < strip[1]:
            raise DocumentError("$.strip", "alpha must be below beta")
    try:
        return ExponentialSum(exponents, tuple(coeffs), strip, allow_zero=True)
    except BohrEquivError as exc:
        raise DocumentError("$.coefficients", str(exc)) from None
    except ValueError as exc:
        raise DocumentError("$", str(exc)) from None


def _real_text(x):
    if math.isinf(x):
        return "+inf" if x > 0 else "-inf"
    return repr(float(x))


def serialize_sum(f):
    """Inverse of ``parse_document`` (fields in canonical order)."""
    gens = f.exponents.generators
    doc = {
        "generators": [{"symbol": s, "value": v} for s, v in gens.entries],
        "precision": gens.precision,
        "frequencies": [[format_rational(c) for c in fr.coords] for fr in f.exponents],
        "coefficients": [
            {"modulus": format_rational(c.modulus),
             "phase_turns": format_rational(c.phase_turns)}
            if isinstance(c, ExactPolar) else {"re": _real_text(c.re), "im": _real_text(c.im)}
            for c in f.coeffs
        ],
    }
    if f.strip is not None:
        doc["strip"] = {"alpha": _real_text(f.strip[0]), "beta": _real_text(f.strip[1])}
    return doc


def load_sum(path):
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"{path}:{exc.lineno}:{exc.colno}", exc.msg) from None
    return parse_document(doc)


def dump_sum(f, fh):
    json.dump(serialize_sum(f), fh, indent=2)
    fh.write("\n")
