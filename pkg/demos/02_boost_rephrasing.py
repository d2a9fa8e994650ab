import jprosody as jp
from jprosody.fixtures import load_fixture

tree, exp = load_fixture("boost4N")
ptree = jp.project(tree)

print(jp.emit_proposed(ptree).text)
print(jp.dependency_distances(tree))  # [6, 1, 1, 1, 2, 1, None]

# Four accented nouns in a chain: culminativity alone leaves them flat,
flat = jp.apply_all(ptree, jp.ConstraintConfig(enable_boost_rephrasing=False))
print(jp.emit_proposed(flat).text)

# and the boost pass pairs them up: [[N1 N2][N3 N4]]
paired = jp.apply_all(ptree)
print(jp.emit_proposed(paired).text)

print(jp.edges_by_word(flat))
print(jp.edges_by_word(paired))

# A phrase with two accents gets split
bad = jp.parse_proposed(r"{[\ka ki | ku \ke]}")
for s in jp.phrase_status(bad):
    print(s)
print(jp.emit_proposed(jp.apply_all(bad)).text)
