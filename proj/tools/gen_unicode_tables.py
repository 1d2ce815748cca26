#!/usr/bin/env python3
"""Regenerates src/unicode_tables.inc from the unicodedata module.

The tables cover general categories L* (letters) and Nd (decimal digits),
plus the single-codepoint lowercase mappings. Mappings whose lowercase form
expands to more than one codepoint (e.g. U+0130) are dropped so that case
folding stays 1:1 and idempotent. Run with the CPython version noted in the
generated header and commit the result; the tables are not rebuilt at
compile time.
"""

import sys
import unicodedata


def ranges(predicate):
    out = []
    start = None
    for cp in range(0x110000):
        if predicate(chr(cp)):
            if start is None:
                start = cp
        else:
            if start is not None:
                out.append((start, cp - 1))
                start = None
    if start is not None:
        out.append((start, 0x10FFFF))
    return out


def lower_runs():
    """(first, last, stride, delta) runs of 1:1 lowercase mappings."""
    pairs = []
    for cp in range(0x110000):
        c = chr(cp)
        low = c.lower()
        if low == c or len(low) != 1:
            continue
        lcp = ord(low)
        # keep folding idempotent: the image must map to itself
        if chr(lcp).lower() != chr(lcp):
            continue
        pairs.append((cp, lcp - cp))

    runs = []
    i = 0
    while i < len(pairs):
        first, delta = pairs[i]
        j = i + 1
        stride = None
        while j < len(pairs) and pairs[j][1] == delta:
            step = pairs[j][0] - pairs[j - 1][0]
            if stride is None:
                if step > 2:
                    break
                stride = step
            elif step != stride:
                break
            j += 1
        last = pairs[j - 1][0]
        runs.append((first, last, stride or 1, delta))
        i = j
    return runs


def emit(f):
    letters = ranges(lambda c: unicodedata.category(c).startswith("L"))
    digits = ranges(lambda c: unicodedata.category(c) == "Nd")
    runs = lower_runs()

    f.write("// Generated by tools/gen_unicode_tables.py -- do not edit.\n")
    f.write("// Python %s, Unicode %s\n\n" % (
        sys.version.split()[0], unicodedata.unidata_version))

    f.write("static constexpr CpRange kLetterRanges[] = {\n")
    for lo, hi in letters:
        f.write("    {0x%X, 0x%X},\n" % (lo, hi))
    f.write("};\n\n")

    f.write("static constexpr CpRange kDigitRanges[] = {\n")
    for lo, hi in digits:
        f.write("    {0x%X, 0x%X},\n" % (lo, hi))
    f.write("};\n\n")

    f.write("static constexpr LowerRun kLowerRuns[] = {\n")
    for first, last, stride, delta in runs:
        f.write("    {0x%X, 0x%X, %d, %d},\n" % (first, last, stride, delta))
    f.write("};\n")


if __name__ == "__main__":
    with open("src/unicode_tables.inc", "w") as f:
        emit(f)
    print("wrote src/unicode_tables.inc")
