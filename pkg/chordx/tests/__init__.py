'''
Unit tests for the chordx library.
'''
