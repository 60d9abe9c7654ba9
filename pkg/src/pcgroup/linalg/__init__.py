from pcgroup.linalg.gfp import EchelonForm, FpMatrix, Solution, echelonize, nullspace, rank, solve

__all__ = ["EchelonForm", "FpMatrix", "Solution", "echelonize", "nullspace", "rank", "solve"]
