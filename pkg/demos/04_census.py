# Which 3 x 2 matrices of zeros and ones are small?
#
# Enumerate all 64, decide smallness exactly, and group the non-small ones by
# row and column permutation.

from adekit.census import enumerate_census

report = enumerate_census(3, 2)
print("total", report.total, "small", report.small_count)
for mat, size in report.non_small_classes:
    print(mat, "orbit size", size)

# a small table of counts
for m, n in [(1, 1), (2, 2), (2, 3), (3, 3), (2, 4), (3, 4)]:
    r = enumerate_census(m, n)
    print(f"{m} x {n}: {r.small_count} of {r.total} small, {len(r.non_small_classes)} non-small classes")
