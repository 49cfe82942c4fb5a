# Forced Pairs application package
