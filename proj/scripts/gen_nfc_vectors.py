#!/usr/bin/env python3
"""Regenerates tests/nfc_vectors.inc: randomized (input, NFC(input)) pairs
computed with Python's unicodedata, frozen as UTF-8 byte literals. Run from
the repository root."""

import random
import unicodedata

SEED = 20240817
COUNT = 400

ASCII = [ord(c) for c in "abcXYZ019 .!"]
LATIN = [0x00E9, 0x00C5, 0x0065, 0x0301, 0x0061, 0x030A, 0x00F1, 0x006E, 0x0303]
GREEK = [0x03B1, 0x0300, 0x0345, 0x1F70, 0x1FB2, 0x03C9, 0x0313, 0x0342]
DEVANAGARI = [0x0915, 0x093E, 0x0930, 0x0941, 0x0958, 0x0915, 0x093C, 0x0902, 0x0964]
ORIYA = [0x0B15, 0x0B3E, 0x0B30, 0x0B41, 0x0B5C, 0x0B21, 0x0B3C]
HANGUL = [0x1100, 0x1161, 0x11A8, 0xAC00, 0xAC01, 0x1112, 0x1175, 0x11C2]
COMBINING = [0x0300, 0x0301, 0x0308, 0x0323, 0x031B, 0x0327, 0x0331, 0x05B0, 0x3099]
POOLS = [ASCII, LATIN, GREEK, DEVANAGARI, ORIYA, HANGUL, COMBINING]


def rand_string(rng):
    n = rng.randint(0, 24)
    cps = []
    for _ in range(n):
        pool = rng.choice(POOLS)
        cps.append(rng.choice(pool))
    return "".join(chr(c) for c in cps)


def lit(s):
    return '"' + "".join("\\x%02x" % b for b in s.encode("utf-8")) + '"'


def main():
    rng = random.Random(SEED)
    with open("tests/nfc_vectors.inc", "w") as f:
        f.write("// Generated by scripts/gen_nfc_vectors.py (Unicode %s). Do not edit.\n"
                % unicodedata.unidata_version)
        f.write("// Each entry is {input_utf8, nfc_utf8}.\n")
        f.write("static const char* kNfcVectors[][2] = {\n")
        for _ in range(COUNT):
            s = rand_string(rng)
            f.write("    {%s,\n     %s},\n" % (lit(s), lit(unicodedata.normalize("NFC", s))))
        f.write("};\n")


if __name__ == "__main__":
    main()
