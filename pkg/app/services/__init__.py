# Services package for the Forced Pairs API
