#!/usr/bin/env python3
"""Mean CCR of LDC on the univariate functional Models A-D."""
from _common import parser, run_models

if __name__ == "__main__":
    args = parser(__doc__).parse_args()
    run_models(["fda-A", "fda-B", "fda-C", "fda-D"], args)
