"""Exact finite-alphabet probability primitives"""
