"""Package for the likelihood encoder codec and the Click codebook command"""
