"""From words to perforated tableaux and back.

A word over [n] is parsed into weakly decreasing factors; factor s becomes
the horizontal strip of s's in a rectangular grid with blanks, one row per
letter value.  The grid is stored left-justified, which makes it a unique
class representative.
"""
from ptableaux import (
    ParsedWord,
    Word,
    biword_from_parsed,
    dual,
    longest_weakly_decreasing,
    matrix_from_biword,
    matrix_from_ptableau,
    minimal_parsing,
    ptableau_from_word,
    rsk,
    word_from_ptableau,
)

word = Word.from_text("2122331331")
print("word:", word.to_text())

pw = minimal_parsing(word)
print("minimal parsing:", pw.to_text())

# an explicit coarser parsing works too
pw = ParsedWord.from_text("21|22|331|331")
print("chosen parsing: ", pw.to_text())

T = ptableau_from_word(pw)
print("\nptableau (left-justified):")
print(T.to_text())
print("weight:", T.weight())

# the column count equals the longest weakly decreasing subword
print("columns:", T.cols, "=", longest_weakly_decreasing(word))

# every model carries the same information
bw = biword_from_parsed(pw)
print("\nbiword:")
print(bw.to_text())

M = matrix_from_biword(bw)
print("\nmatrix (entry i,j counts i's over j):")
print(M.to_text())

D = dual(T)
print("\ndual ptableau (rows and content exchanged):")
print(D.to_text())
print("dual matrix is the transpose:", matrix_from_ptableau(D) == M.transpose())

pair = rsk(bw)
print("\ninsertion tableau:")
print(pair.insertion.to_text())
print("recording tableau:")
print(pair.recording.to_text())

print("\nround trip:", word_from_ptableau(T).to_text())
