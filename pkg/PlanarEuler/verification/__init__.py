"""
Theorem verifiers, their reports and configuration, and the (f0, f1) sweep table.
"""
