# Integration tests for l1lab
