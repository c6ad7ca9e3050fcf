"""
Jumbled matching on a small text
================================

A window of a text jumble-matches a query when both hold the same number of
each symbol. This script builds a text, asks a few questions of it and
compares the available backends.
"""

# %%
# A text over ``{a, b, c}``. Positions are 1-based and inclusive.
from jumbled_lab import JIText, ParikhVector, enumerate_matches, parikh_of
from jumbled_lab.index import BACKENDS, make_backend

text = JIText.from_string("abcabbacbca", "abc")
print(text, parikh_of(text).counts)
print("text[3..6] =", parikh_of(text, 3, 6).counts)

# %%
# Every start whose window has two a's, one b and one c.
psi = ParikhVector((2, 1, 1), text.alphabet)
print("matches of", psi.counts, "start at", enumerate_matches(text, psi))

# %%
# The naive index stores every window vector and answers by lookup; the
# sliding backend scans the text per query. Both report the leftmost start.
for name in ("naive", "sliding"):
    backend = make_backend(name, text)
    print(f"{name:8s} locate={backend.locate(psi)} "
          f"preprocess={backend.preprocess_ns / 1e3:.1f} us")

# %%
# Binary texts admit a much smaller index: for each window length only the
# minimum and maximum number of ones is kept, since every value in between
# is attained by some window.
from jumbled_lab import build_binary_minmax, query_binary

bits = JIText.from_string("0110100111", "01")
idx = build_binary_minmax(bits)
for m in range(1, len(bits) + 1):
    print(f"length {m:2d}: ones in [{idx.min_ones[m]}, {idx.max_ones[m]}]")
print("3 zeros + 3 ones present?", query_binary(idx, (3, 3)))
print("available backends:", sorted(BACKENDS))
