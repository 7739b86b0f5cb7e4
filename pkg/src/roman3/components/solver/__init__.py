"""
Solver components: the block-graph DP and the two exact oracles.
"""
