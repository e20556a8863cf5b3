"""Build a mixed code over F_9 x R, take its Gray image, its dual and the CSS code."""

from skewcodec import CodeContext, GF, build_mixed_code, css, dual_containing_mixed, gray_image_code, min_distance
from skewcodec.duality import dual_generators

F = GF(3, 2, [2, 2, 1])
F.powers = True
ctx = CodeContext(F, 1)

ell = "x^4 + w^3*x^3 + w*x^2 + w^3*x + 2"
t = ["x^2 + w^7*x + w^6", "x + w^6", "x + w^6", "x + w^6"]
code = build_mixed_code(ctx, 26, 6, ell, None, t)
print("k =", code.k, " f =", code.summary()["f"])

lc = gray_image_code(code)
rep = min_distance(lc, strategy="support_search")
print("Gray image", lc.params(rep.distance), f"({rep.work_count} rank checks)")

gens = dual_generators(code)
print("dual generators", gens.to_json()["t_bar"], "ell_bar degree", gens.degrees()["ell_bar"])

q = css(lc.n, lc.k, rep.distance, F.q, dual_containing_mixed(code))
print("quantum code", q, "Singleton defect", q.defect)
