"""Building crystal graphs and decomposing word spaces.

Closing a seed under all raising and lowering operators gives a connected
crystal graph with a unique highest weight node.  The full set of length-k
words decomposes into such components; multiplicities follow standard
counts.
"""
from ptableaux import (
    Word,
    component,
    decompose,
    export_dot,
    isomorphic,
    ptableau_from_word,
    words_closure,
)

g1 = component(ptableau_from_word(Word.from_text("1112", rank=3)))
g2 = component(ptableau_from_word(Word.from_text("1211", rank=3)))
print("component of 1112:", len(g1), "nodes,", len(g1.edges), "edges")
print("component of 1211:", len(g2), "nodes")
print("disjoint:", not (g1.node_set() & g2.node_set()))
print("isomorphic (same highest weight):", isomorphic(g1, g2))
print("highest weight node:")
print(g1.highest_weight_node.to_text())

print("\ndecomposition of all rank-3 words of length 3:")
for graph in decompose(words_closure(3, 3)):
    label = ",".join(str(p) for p in graph.weight_label if p)
    print(f"  weight ({label})  size {len(graph)}")

print("\nDOT export of the standard crystal:")
print(export_dot(component(ptableau_from_word(Word(3, (1,))))))
