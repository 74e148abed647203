#!/usr/bin/env python3
"""Regenerates src/unicode_tables.inc from Python's unicodedata module.

The tables cover exactly what the text normalizer needs: White_Space,
general category P*, canonical combining classes, full canonical
decompositions (Hangul excluded, handled algorithmically) and primary
composites. Run from the repository root:

    python3 scripts/gen_unicode_tables.py
"""

import sys
import unicodedata

MAX_CP = 0x110000
HANGUL_FIRST, HANGUL_LAST = 0xAC00, 0xD7A3

# Unicode White_Space: category Z* plus the usual control whitespace.
CONTROL_WS = {0x09, 0x0A, 0x0B, 0x0C, 0x0D, 0x85}


def category(cp):
    return unicodedata.category(chr(cp))


def is_whitespace(cp):
    return cp in CONTROL_WS or category(cp) in ("Zs", "Zl", "Zp")


def is_punct(cp):
    return category(cp).startswith("P")


def ranges_of(pred):
    out = []
    start = None
    for cp in range(MAX_CP):
        if pred(cp):
            if start is None:
                start = cp
        elif start is not None:
            out.append((start, cp - 1))
            start = None
    if start is not None:
        out.append((start, MAX_CP - 1))
    return out


def canonical_decomp(cp):
    """First-level canonical decomposition as a list of codepoints, or None."""
    raw = unicodedata.decomposition(chr(cp))
    if not raw or raw.startswith("<"):
        return None
    return [int(f, 16) for f in raw.split()]


def full_decomp(cp):
    """Recursively expanded canonical decomposition."""
    d = canonical_decomp(cp)
    if d is None:
        return [cp]
    out = []
    for piece in d:
        out.extend(full_decomp(piece))
    return out


def main():
    ws = ranges_of(is_whitespace)
    punct = ranges_of(is_punct)

    ccc = [(cp, unicodedata.combining(chr(cp)))
           for cp in range(MAX_CP) if unicodedata.combining(chr(cp)) != 0]

    decomp_entries = []   # (cp, offset, len)
    pool = []
    for cp in range(MAX_CP):
        if HANGUL_FIRST <= cp <= HANGUL_LAST:
            continue
        if canonical_decomp(cp) is None:
            continue
        expansion = full_decomp(cp)
        decomp_entries.append((cp, len(pool), len(expansion)))
        pool.extend(expansion)

    # Primary composites: two-codepoint canonical decompositions that NFC
    # actually recombines (this bakes in the composition exclusions).
    comp = []
    for cp in range(MAX_CP):
        if HANGUL_FIRST <= cp <= HANGUL_LAST:
            continue
        d = canonical_decomp(cp)
        if d is None or len(d) != 2:
            continue
        a, b = d
        if unicodedata.normalize("NFC", chr(a) + chr(b)) == chr(cp):
            comp.append((a, b, cp))
    comp.sort()

    def fmt_rows(rows, per_line):
        lines = []
        for i in range(0, len(rows), per_line):
            lines.append("    " + " ".join(rows[i:i + per_line]))
        return "\n".join(lines)

    with open("src/unicode_tables.inc", "w") as f:
        w = f.write
        w("// Generated by scripts/gen_unicode_tables.py (Unicode %s via Python %d.%d).\n"
          % (unicodedata.unidata_version, sys.version_info[0], sys.version_info[1]))
        w("// Do not edit by hand.\n\n")

        w("inline constexpr CpRange kWhitespaceRanges[] = {\n")
        w(fmt_rows(["{0x%X, 0x%X}," % r for r in ws], 6))
        w("\n};\n\n")

        w("inline constexpr CpRange kPunctRanges[] = {\n")
        w(fmt_rows(["{0x%X, 0x%X}," % r for r in punct], 6))
        w("\n};\n\n")

        w("inline constexpr CccEntry kCombiningClass[] = {\n")
        w(fmt_rows(["{0x%X, %d}," % e for e in ccc], 6))
        w("\n};\n\n")

        w("inline constexpr char32_t kDecompPool[] = {\n")
        w(fmt_rows(["0x%X," % cp for cp in pool], 10))
        w("\n};\n\n")

        w("inline constexpr DecompEntry kDecomp[] = {\n")
        w(fmt_rows(["{0x%X, %d, %d}," % e for e in decomp_entries], 5))
        w("\n};\n\n")

        w("inline constexpr CompEntry kComposition[] = {\n")
        w(fmt_rows(["{0x%X, 0x%X, 0x%X}," % e for e in comp], 5))
        w("\n};\n")

    sys.stderr.write(
        "unicode_tables.inc: ws=%d punct=%d ccc=%d decomp=%d pool=%d comp=%d\n"
        % (len(ws), len(punct), len(ccc), len(decomp_entries), len(pool), len(comp)))


if __name__ == "__main__":
    main()
