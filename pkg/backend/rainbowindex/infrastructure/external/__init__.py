"""External formats"""
