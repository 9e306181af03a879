"""Exceptional sequences for linear A_n and rooted labeled forests."""
