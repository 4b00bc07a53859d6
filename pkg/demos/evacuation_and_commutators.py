"""Evacuation as a product of lowering operators, and commutators by
tableau switching.

Inward jeu de taquin moves the blanks of a highest weight ptableau from
the lower right to the upper left; the result is the lowest weight node of
its component, and each blank's path factors into lowering operators.
Push-down/push-up switch the two content classes of a highest weight
tensor product, computing the commutator isomorphism on highest weights.
"""
from ptableaux import (
    PTableau,
    evacuate,
    evacuation_as_operators,
    highest_weight_ptableau,
    lusztig_involution,
    ptab_lowering,
    push_down,
    push_up,
    rotate,
    tensor,
)

T = PTableau.from_text("1 1 2 2 3 4\n2 3 3 4 . .\n3 4 5 . . .", 5)
print("highest weight input:")
print(T.to_text())

E = evacuate(T)
print("\nevacuation (the lowest weight node):")
print(E.to_text())
print("weight reversed:", T.weight(), "->", E.weight())

ops = evacuation_as_operators(T)
print("\noperator factorization:", " ".join(f"f{i}" for i in ops))
cur = T
for i in ops:
    cur = ptab_lowering(cur, i)
print("product of operators equals evacuation:", cur == E)

print("\nLusztig involution (rotate the evacuation):")
print(lusztig_involution(T).to_text())
print("equals rotate(evacuate):", lusztig_involution(T) == rotate(E))

# a commutator: exchange the tensor factors of a highest weight element
mu = highest_weight_ptableau((6, 3, 1, 0))
right = PTableau.from_text(
    ". . . 1 1 1 1\n. 1 1 2 2 2 .\n1 2 3 3 . . .\n2 3 4 4 . . .", 4
)
S = tensor(mu, right)
print("\nhighest weight tensor product of shape", S.weight(), ":")
print(S.to_text())

out = push_down(S, mu.content_bound)
print("\ncommutator image (push-down):")
print(out.to_text())
print("push-up agrees:", push_up(S, mu.content_bound) == out)
print("weight preserved:", out.weight() == S.weight())
