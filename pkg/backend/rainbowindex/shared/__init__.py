"""Shared utilities and exceptions"""
