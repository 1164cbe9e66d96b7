"""
Helpers shared by the command extensions
"""
