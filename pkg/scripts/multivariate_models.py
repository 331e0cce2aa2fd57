#!/usr/bin/env python3
"""Mean CCR of LDC on the multivariate Models 1-14 (alpha 0.4, beta 0.2, N 50, k 3)."""
from _common import parser, run_models

if __name__ == "__main__":
    p = parser(__doc__)
    p.add_argument("--models", default="1,2,5,9,13,14",
                   help="comma list of model ids, or 'all' for 1-14")
    args = p.parse_args()
    ids = [str(i) for i in range(1, 15)] if args.models == "all" else args.models.split(",")
    run_models(ids, args)
