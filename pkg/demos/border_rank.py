"""Rank is not upper semicontinuous for order three and higher: sequences of
rank-2 tensors can converge to rank-3 limits.

Each family here ships a low-rank witness for every member A_eps and a
closed-form limit A_0 with a higher-rank decomposition.  The distance to the
limit shrinks linearly in epsilon (log-log slope 1), while the witness rank
never rises: the set of tensors of rank at most 2 is not closed.
"""

from waring import (
    border_distance_table,
    border_sequence,
    fit_loglog_slope,
    limit_decomposition,
    make_border_spec,
    render_quantic,
    tensor_to_quantic,
    verify,
)

for kind in ("rank2_to_3", "rank2_to_k", "tangent_sum"):
    spec = make_border_spec(kind)
    step = border_sequence(spec, 0.125)
    lim = limit_decomposition(spec)
    print(f"{kind}: witness rank {len(step.witness.terms)}, "
          f"limit rank {len(lim.terms)}")
    print("  limit polynomial:", render_quantic(tensor_to_quantic(step.a_limit)))
    print("  witness verifies:", verify(step.witness, step.a_eps).ok,
          " limit decomposition verifies:", verify(lim, step.a_limit).ok)
    table = border_distance_table(spec)
    print("  epsilon -> distance:")
    for eps, dist in table:
        print(f"    {eps:<12.6g} {dist:.6g}")
    print(f"  fitted log-log slope: {fit_loglog_slope(table):.4f}\n")

print("the same family at order 6:")
spec6 = make_border_spec("rank2_to_k", order=6)
print("  slope", round(fit_loglog_slope(border_distance_table(spec6)), 4),
      "limit rank", len(limit_decomposition(spec6).terms))
