"""Exact domain types: cyclotomic scalars, matrix groups, sectors and graded tables."""
