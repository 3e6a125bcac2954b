"""
Network Dictionary Toolkit
Latent motif learning, network reconstruction and denoising
"""

__version__ = "1.0.0"
