"""Raising and lowering operators as single jeu-de-taquin moves.

On words the operators need running counts over the whole word; on
ptableaux they swap one uncovered cell with the blank above (raising) or
below (lowering).  The two computations commute through the word-to-
ptableau map, and highest weight elements are visible at a glance: they
are exactly the partition-shaped ptableaux.
"""
from ptableaux import (
    ParsedWord,
    is_partition_shaped,
    is_yamanouchi,
    ptab_epsilon,
    ptab_phi,
    ptab_raising,
    ptableau_from_word,
    to_highest_weight,
    word_raising,
)

pw = ParsedWord.from_text("322|3311|222|3")
T = ptableau_from_word(pw)
print("start:", pw.to_text())
print(T.to_text())

# a full raising string for index 1
cur_w, cur_t = pw, T
while True:
    nxt = word_raising(cur_w, 1)
    if nxt is None:
        break
    cur_w = nxt
    cur_t = ptab_raising(cur_t, 1)
    print("\nafter e1 ->", cur_w.to_text())
    print(cur_t.to_text())
    assert cur_t == ptableau_from_word(cur_w)

print("\nstatistics: epsilon_1 =", ptab_epsilon(T, 1), " phi_1 =", ptab_phi(T, 1))

# raising to the top of the component
top, seq = to_highest_weight(T)
print("\nhighest weight reached via", " ".join(f"e{i}" for i in seq))
print(top.to_text())
print("partition shaped:", is_partition_shaped(top))

from ptableaux import word_from_ptableau

top_word = word_from_ptableau(top)
print("its word", top_word.to_text(), "is Yamanouchi:", is_yamanouchi(top_word.word))
