"""Experiment configuration files"""
