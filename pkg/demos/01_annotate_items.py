import jprosody as jp
from jprosody.fixtures import load_fixture

# The two initial-lowering items differ only in where N2 attaches.
for fid in ["tree1", "tree2"]:
    tree, exp = load_fixture(fid)
    print(fid)
    print("  distances", jp.dependency_distances(tree))

    ptree = jp.apply_all(jp.project(tree))
    print("  edges    ", [j.left_edge_count for j in jp.left_edge_counts(ptree)])

    for fmt in ["baseline1", "baseline2"]:
        print(" ", fmt.ljust(9), jp.emit(fmt, tree).text)
    print("  proposed ", jp.emit_proposed(ptree).text)
    print()

# round trip through the proposed format
text = jp.emit_proposed(jp.apply_all(jp.project(load_fixture("tree2")[0]))).text
back = jp.parse_proposed(text)
print(jp.emit_proposed(back).text == text)  # True
