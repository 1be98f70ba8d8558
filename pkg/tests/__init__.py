"""Test module"""
