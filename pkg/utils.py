# Author: Victor
# Page name: utils.py
# Page purpose: Decimal rendering of high-precision values, digit grouping, input validation and filenames
# Date of creation: 2026-10-16
import re
from datetime import datetime

import mpmath
from mpmath import mpc, mpf

from kernel import to_ap

MAX_DIGITS = 10_000_000


def sanitize_filename(filename):
    # Remove or replace invalid characters
    filename = re.sub(r'[<>:"/\\|?*]', '_', filename)
    filename = filename.strip('. ')
    if not filename:
        filename = "report"
    if len(filename) > 100:
        filename = filename[:100]
    return filename


def default_report_name(prefix, extension):
    stamp = datetime.now().strftime('%Y%m%d_%H%M%S')
    return sanitize_filename(f"{prefix}_{stamp}.{extension}")


def render_number(value, digits, tolerance=None):
    """Decimal string with `digits` significant digits: "x", "x+yi" or "x-yi".

    An imaginary part at most tolerance * max(|value|, 1) is dropped.
    """
    value = to_ap(value)
    if isinstance(value, mpc):
        scale = max(abs(value), 1)
        if value.imag == 0 or (tolerance is not None and abs(value.imag) <= tolerance * scale):
            return mpmath.nstr(value.real, digits)
        sign = "-" if value.imag < 0 else "+"
        return f"{mpmath.nstr(value.real, digits)}{sign}{mpmath.nstr(abs(value.imag), digits)}i"
    return mpmath.nstr(value, digits)


def parse_number(text):
    """Inverse of render_number at the current working precision."""
    text = text.strip().replace(" ", "")
    if not text.endswith("i"):
        return mpf(text)
    body = text[:-1]
    # split at the last sign that is not part of an exponent
    for k in range(len(body) - 1, 0, -1):
        if body[k] in "+-" and body[k - 1] not in "eE":
            imag = body[k + 1:] or "1"
            real_part = mpf(body[:k])
            imag_part = mpf(imag)
            return mpc(real_part, -imag_part if body[k] == "-" else imag_part)
    return mpc(0, mpf(body or "1"))


def group_digits(text, block=10):
    """'3.14159265358979' -> '3.1415926535 8979'; only the fractional part is grouped."""
    if "." not in text:
        return text
    head, tail = text.split(".", 1)
    blocks = [tail[i:i + block] for i in range(0, len(tail), block)]
    return f"{head}." + " ".join(blocks)


def validate_digits(digits, maximum=MAX_DIGITS):
    errors = []

    if isinstance(digits, bool) or not isinstance(digits, int):
        errors.append("Digits must be an integer")
    elif digits < 1:
        errors.append("Digits must be at least 1")
    elif digits > maximum:
        errors.append(f"Digits is too large (maximum {maximum:,})")

    return {
        'valid': len(errors) == 0,
        'errors': errors
    }


def parse_tau_spec(text):
    """'heegner:a,b,c' -> ('heegner', (a, b, c)); 'complex:x,y' -> ('complex', ('x', 'y'))."""
    errors = []
    kind, _, payload = text.partition(":")
    parts = [part.strip() for part in payload.split(",")] if payload else []
    if kind == "heegner":
        try:
            values = tuple(int(part) for part in parts)
        except ValueError:
            values = ()
        if len(values) != 3:
            errors.append(f"heegner tau needs three integers a,b,c, got {payload!r}")
        return {'valid': not errors, 'errors': errors, 'kind': kind, 'values': values}
    if kind == "complex":
        if len(parts) != 2:
            errors.append(f"complex tau needs two decimals x,y, got {payload!r}")
        else:
            for part in parts:
                try:
                    mpf(part)
                except ValueError:
                    errors.append(f"not a decimal: {part!r}")
        return {'valid': not errors, 'errors': errors, 'kind': kind, 'values': tuple(parts)}
    errors.append(f"tau must start with 'heegner:' or 'complex:', got {text!r}")
    return {'valid': False, 'errors': errors, 'kind': kind, 'values': ()}
