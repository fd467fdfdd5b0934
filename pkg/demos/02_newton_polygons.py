"""Newton polygons and the polygon-based threshold estimate.

The lower-left hull of the exponent support controls the local geometry of
a curve germ: its axis endpoints are the vanishing orders along the axes, a
single segment is necessary for irreducibility, and the inner normals give
a monomial-valuation estimate of the singularity threshold.
"""

from cselab import (
    builtin_catalog,
    compute_polygon,
    endpoints,
    lct_from_resolution,
    lct_polygon_estimate,
    parse_expression,
    principal_part,
    single_segment,
    format_function,
)

for text in ["y^2 - x^3", "x*y + x^3 + y^3", "x + y + x^2", "x^2 + y^5"]:
    f = parse_expression(text)
    polygon = compute_polygon(f)
    print(f"F = {text}")
    print(f"  vertices:        {list(polygon.vertices)}")
    print(f"  single segment:  {single_segment(polygon)}"
          "  (necessary for irreducibility, never sufficient)")
    k, l = endpoints(polygon)
    print(f"  axis endpoints:  (k, l) = ({k}, {l})")
    pp = principal_part(f, (k, l))
    print(f"  principal part:  {format_function(pp.poly)}")
    print(f"  threshold estimate: {lct_polygon_estimate(f)}")
    print()

# -- cross-check against hand-derived resolution data -------------------------

print("catalog entry       resolution    polygon estimate")
for name, entry in sorted(builtin_catalog().items()):
    res = lct_from_resolution(entry.divisors, entry.is_log_resolution)
    est = lct_polygon_estimate(parse_expression(entry.curve))
    mark = "ok" if res.value == est else "MISMATCH"
    print(f"  {name:<16}  {str(res.value):>6} ({res.label})  {str(est):>6}  {mark}")
