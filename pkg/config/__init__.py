"""
Configuration profiles
"""
