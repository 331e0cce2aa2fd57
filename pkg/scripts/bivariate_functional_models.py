#!/usr/bin/env python3
"""Mean ARI of LDC on the bivariate functional Models A-C."""
from _common import parser, run_models

if __name__ == "__main__":
    args = parser(__doc__).parse_args()
    run_models(["mfd-A", "mfd-B", "mfd-C"], args, metric="mean_ari")
