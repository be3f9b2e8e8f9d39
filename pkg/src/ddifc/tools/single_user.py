from src.schemas import ChannelMatrix, Codebook


def single_user_code(H: ChannelMatrix, user: int, T: int) -> Codebook:
    """
    Only `user` transmits, with C_user = {0..T}; every other codebook is {0}.
    Decodable on any H since no receiver sees more than one non-zero term.
    """
    if T < 1:
        raise ValueError(f"T must be at least 1, got {T}")
    return Codebook(sets=[list(range(T + 1)) if j == user else [0] for j in range(H.K)])
