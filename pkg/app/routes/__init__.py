# Routes package for the Forced Pairs API
