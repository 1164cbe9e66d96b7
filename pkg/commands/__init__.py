"""
Command extensions loaded by main.py
"""
