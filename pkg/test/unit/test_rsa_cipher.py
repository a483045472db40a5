import pytest

from src.errors import InputError
from src.rsa_lab import (
    PublicKey,
    RsaKeyPair,
    choose_public_exponent,
    decrypt,
    encrypt,
    keygen,
)
from src.util.primality import is_prime


@pytest.fixture(scope='module')
def toy_key():
    return keygen(8)


class TestKeygen:
    def test_eight_bit_key(self, toy_key):
        assert {toy_key.p, toy_key.q} == {11, 13}
        assert (toy_key.n, toy_key.e, toy_key.d) == (143, 7, 103)
        assert toy_key.phi == 120

    def test_deterministic(self):
        assert keygen(48, seed=11) == keygen(48, seed=11)

    @pytest.mark.parametrize('seed', [0, 1, 2, 3])
    def test_64_bit_key_invariants(self, seed):
        key = keygen(64, seed=seed)
        assert key.bits in (63, 64)
        assert key.p != key.q and is_prime(key.p) and is_prime(key.q)
        assert key.n == key.p * key.q
        assert key.e * key.d % key.phi == 1

    def test_odd_sizes_split_unevenly(self):
        key = keygen(9, seed=4)
        assert sorted((key.p.bit_length(), key.q.bit_length())) == [4, 5]

    @pytest.mark.parametrize('bits', [7, 300, 64.0, True])
    def test_rejects_sizes_outside_desk_scale(self, bits):
        with pytest.raises(InputError):
            keygen(bits)

    def test_public_exponent(self):
        assert choose_public_exponent(120) == 7
        assert choose_public_exponent(2 ** 20) == 65537

    def test_key_pair_validation(self):
        with pytest.raises(InputError):
            RsaKeyPair(n=143, e=7, d=101, p=11, q=13)
        with pytest.raises(InputError):
            RsaKeyPair(n=121, e=3, d=7, p=11, q=11)
        with pytest.raises(InputError):
            RsaKeyPair(n=15 * 13, e=7, d=7, p=15, q=13)

    def test_to_dict_uses_strings(self, toy_key):
        assert toy_key.to_dict()['d'] == '103'
        assert toy_key.public_key == PublicKey(143, 7)


class TestCipher:
    @pytest.mark.parametrize('m, c', [(0, 0), (1, 1), (5, 47)])
    def test_encrypt(self, m, c):
        assert encrypt((143, 7), m) == c

    def test_decrypt(self):
        assert decrypt(103, 143, 47) == 5

    def test_every_residue_round_trips(self, toy_key):
        for m in range(toy_key.n):
            assert decrypt(toy_key.d, toy_key.n, encrypt(toy_key.public_key, m)) == m

    def test_residue_range(self):
        with pytest.raises(InputError):
            encrypt((143, 7), 143)
        with pytest.raises(InputError):
            encrypt((143, 7), -1)
        with pytest.raises(InputError):
            decrypt(103, 143, 200)
