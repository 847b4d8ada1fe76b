"""Package for the rate-distortion solver and the Click rd-curve command"""
