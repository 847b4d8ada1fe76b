"""Soft covering and achievability instrumentation"""
