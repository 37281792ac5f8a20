#!/usr/bin/env python3
# Copyright 2026 The abugida-syllables Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates core/data/<script>.tsv from the Unicode character database.

Usage: gen_profiles.py <output dir>

Only code points that fall into one of the five syllable-relevant classes are
written; everything else inside a block is implicitly `Other`.
"""
import os
import sys
import unicodedata

BLOCKS = {
    "bengali": (0x0980, 0x09FF),
    "hindi": (0x0900, 0x097F),
    "khmer": (0x1780, 0x17FF),
    "lao": (0x0E80, 0x0EFF),
    "myanmar": (0x1000, 0x109F),
    "thai": (0x0E00, 0x0E7F),
}

# Names (after the "<SCRIPT> LETTER " prefix) that denote independent vowels
# in the Brahmic blocks.
INDIC_VOWEL_LETTERS = {
    "A", "AA", "I", "II", "U", "UU", "E", "EE", "AI", "O", "OO", "AU",
    "VOCALIC R", "VOCALIC RR", "VOCALIC L", "VOCALIC LL", "SHORT A",
    "CANDRA A", "CANDRA E", "SHORT E", "CANDRA O", "SHORT O", "OE", "OOE",
    "AW", "UE", "UUE", "MON E", "SHAN A",
}

THAI_VOWEL_SIGNS = {
    "SARA A", "MAI HAN-AKAT", "SARA AA", "SARA AM", "SARA I", "SARA II",
    "SARA UE", "SARA UEE", "SARA U", "SARA UU", "SARA E", "SARA AE", "SARA O",
    "SARA AI MAIMUAN", "SARA AI MAIMALAI", "LAKKHANGYAO",
}
THAI_DIACRITICS = {
    "PHINTHU", "MAITAIKHU", "MAI EK", "MAI THO", "MAI TRI", "MAI CHATTAWA",
    "THANTHAKHAT", "NIKHAHIT", "YAMAKKAN",
}


def classify(script, cp):
    try:
        name = unicodedata.name(chr(cp))
    except ValueError:
        return None
    cat = unicodedata.category(chr(cp))
    if "DIGIT" in name and cat == "Nd":
        return "Digit"

    if script == "thai":
        rest = name.removeprefix("THAI CHARACTER ")
        if rest in THAI_VOWEL_SIGNS:
            return "DependentVowelSign"
        if rest in THAI_DIACRITICS:
            return "Diacritic"
        if rest in ("RU", "LU"):
            return "IndependentVowel"
        if 0x0E01 <= cp <= 0x0E2E:
            return "Consonant"
        return None

    if script == "lao":
        if name.startswith("LAO LETTER "):
            return "Consonant"
        if name.startswith("LAO VOWEL SIGN "):
            return "DependentVowelSign"
        if name.startswith(("LAO TONE ", "LAO SEMIVOWEL SIGN ", "LAO SIGN ")) \
                or name in ("LAO CANCELLATION MARK", "LAO NIGGAHITA"):
            return "Diacritic"
        return None

    if script == "khmer":
        if name.startswith("KHMER INDEPENDENT VOWEL "):
            return "IndependentVowel"
        if name.startswith("KHMER LETTER "):
            return "Consonant"
        if name.startswith("KHMER VOWEL SIGN "):
            return "DependentVowelSign"
        if name.startswith("KHMER SIGN ") and cat in ("Mn", "Mc"):
            return "Diacritic"
        return None

    # Brahmic blocks: Bengali, Devanagari, Myanmar.
    if "VOWEL SIGN" in name or name.endswith("AU LENGTH MARK"):
        return "DependentVowelSign"
    for prefix in ("BENGALI LETTER ", "DEVANAGARI LETTER ", "MYANMAR LETTER "):
        if name.startswith(prefix):
            rest = name.removeprefix(prefix)
            if script == "myanmar" and rest == "A":
                return "Consonant"  # vowel carrier, behaves as a consonant
            if rest in INDIC_VOWEL_LETTERS or rest.startswith("VOCALIC "):
                return "IndependentVowel"
            return "Consonant" if cat == "Lo" else None
    if cat in ("Mn", "Mc") and ("SIGN" in name or "TONE" in name):
        return "Diacritic"
    return None


def main():
    out = sys.argv[1]
    os.makedirs(out, exist_ok=True)
    for script, (lo, hi) in BLOCKS.items():
        with open(os.path.join(out, script + ".tsv"), "w", encoding="utf-8") as f:
            f.write("# block\t%04X-%04X\n" % (lo, hi))
            for cp in range(lo, hi + 1):
                cls = classify(script, cp)
                if cls:
                    f.write("%04X\t%s\n" % (cp, cls))


if __name__ == "__main__":
    main()
