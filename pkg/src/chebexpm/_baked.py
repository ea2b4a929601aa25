"""Double-precision scheme coefficients, generated by ``python3 -m chebexpm.coeffbake``."""

BAKED = {
    2: {
        'alpha0': float.fromhex('0x1.0000000000000p+0'),
        'alpha1': complex(0.0, float.fromhex('-0x1.ffffffffcba6fp-1')),
        'alpha2': float.fromhex('-0x1.ffffffffdd193p-2'),
    },
    4: {
        'alpha0': float.fromhex('0x1.0000000000000p+0'),
        'alpha1': complex(0.0, float.fromhex('-0x1.ffffffffff957p-1')),
        'alpha2': float.fromhex('-0x1.ffffffffffc11p-2'),
        'x1': complex(0.0, float.fromhex('0x1.555549699ddb4p-3')),
        'x2': float.fromhex('0x1.55554bcbf5b53p-5'),
    },
    8: {
        'x1': float.fromhex('0x1.b95810624dd1bp-4'),
        'x2': complex(0.0, float.fromhex('-0x1.b95ea4cd2b4dfp-6')),
        'x3': complex(0.0, float.fromhex('0x1.539044564bd4ap-1')),
        'x4': complex(0.0, float.fromhex('0x1.19664a5a32708p-1')),
        'x5': float.fromhex('0x1.4bcba6d34644ep-3'),
        'x6': complex(0.0, float.fromhex('-0x1.d0a4ef6606a2dp-7')),
        'x7': float.fromhex('-0x1.17d5bef2765b8p-5'),
        'alpha0': float.fromhex('0x1.0000000000000p+0'),
        'alpha1': complex(0.0, float.fromhex('-0x1.fffffffffffbbp-1')),
        'alpha2': float.fromhex('-0x1.157dedc569fdap-3'),
    },
    12: {
        'a01': float.fromhex('-0x1.911fdd4e8bf5cp+2'),
        'a11': complex(0.0, float.fromhex('0x1.42ca3e0b84c56p+1')),
        'a21': float.fromhex('0x1.da036fa176082p-5'),
        'a31': complex(0.0, float.fromhex('-0x1.3e1f9c135a5fdp-4')),
        'a02': float.fromhex('0x0.0p+0'),
        'a12': complex(0.0, float.fromhex('0x1.696e36a9b6febp+0')),
        'a22': float.fromhex('0x0.0p+0'),
        'a32': complex(0.0, float.fromhex('-0x1.1c13ce34bdf12p-7')),
        'a03': float.fromhex('0x1.591162bc94b6fp+1'),
        'a13': complex(0.0, float.fromhex('-0x1.5bee95a6a4c57p+0')),
        'a23': float.fromhex('-0x1.955954a6a385dp-4'),
        'a33': complex(0.0, float.fromhex('0x1.059133b582251p-6')),
        'a04': float.fromhex('0x0.0p+0'),
        'a14': complex(0.0, float.fromhex('0x1.1136426faafe3p-3')),
        'a24': float.fromhex('0x1.4b6213ed5f15fp-6'),
        'a34': complex(0.0, float.fromhex('-0x1.ba2183d27232fp-8')),
    },
    18: {
        'a01': float.fromhex('0x0.0p+0'),
        'a11': float.fromhex('0x1.eb851eb851eb2p-4'),
        'a21': complex(0.0, float.fromhex('-0x1.1f8807b212dc0p-7')),
        'a31': float.fromhex('-0x1.0080fc505f332p-10'),
        'b01': float.fromhex('0x0.0p+0'),
        'b11': complex(0.0, float.fromhex('-0x1.52210d015b6d5p-1')),
        'b21': float.fromhex('-0x1.17d0575a22f5dp+0'),
        'b31': complex(0.0, float.fromhex('0x1.03dcb0fc1a421p-2')),
        'b61': float.fromhex('0x1.1d13e807b3fe0p-11'),
        'b02': float.fromhex('-0x1.4a76ecce5ff88p+1'),
        'b12': complex(0.0, float.fromhex('-0x1.baf716daa5641p+0')),
        'b22': float.fromhex('-0x1.3a4e3c8762fefp-4'),
        'b32': complex(0.0, float.fromhex('-0x1.56c1d611ed0a0p-9')),
        'b62': float.fromhex('-0x1.1d36b39acc2abp-15'),
        'b03': float.fromhex('0x1.763e5807f4767p+1'),
        'b13': complex(0.0, float.fromhex('0x1.71f43c8c4b7d2p+0')),
        'b23': float.fromhex('0x1.fc3d3c2360356p-4'),
        'b33': complex(0.0, float.fromhex('-0x1.40a91e469c73ap-6')),
        'b63': float.fromhex('0x1.96e3d2d1d9607p-16'),
        'b04': float.fromhex('0x0.0p+0'),
        'b14': float.fromhex('0x0.0p+0'),
        'b24': complex(0.0, float.fromhex('-0x1.fbb6dededfdfep-4')),
        'b34': float.fromhex('-0x1.6f1703fc19939p-7'),
        'b64': complex(0.0, float.fromhex('-0x1.9ef9c98cf6accp-17')),
    },
    'CS5': {
        'alpha0': float.fromhex('0x1.fffffffffffffp-1'),
        'alpha1': float.fromhex('-0x1.ffffffffbfa26p-2'),
        'alpha2': float.fromhex('0x1.5554bc3992d33p-5'),
        'z0': float.fromhex('0x1.fffffffffffe6p-1'),
        'z1': float.fromhex('-0x1.5555555538b62p-3'),
        'z2': float.fromhex('0x1.1110aafe8cab6p-7'),
    },
    'CS8a': {
        'alpha0': float.fromhex('0x1.0000000000000p+0'),
        'alpha1': float.fromhex('-0x1.fffffffffffcfp-2'),
        'alpha2': float.fromhex('0x1.55555555319e4p-5'),
        'x1': float.fromhex('-0x1.6c16be82aa942p-10'),
        'x2': float.fromhex('0x1.9fe864fe8bf6fp-16'),
        'z0': float.fromhex('0x1.b6e53caba87c4p-1'),
        'z1': float.fromhex('-0x1.863f9d58e1905p-4'),
        'z2': float.fromhex('0x1.387c1585d3edap-9'),
        'z3': float.fromhex('0x1.246b0d515dfb2p-3'),
    },
    'CS9': {
        'alpha0': float.fromhex('0x1.fffffffffffffp-1'),
        'alpha1': float.fromhex('-0x1.ffffffffff795p-2'),
        'alpha2': float.fromhex('0x1.555555527847ep-5'),
        'alpha3': float.fromhex('-0x1.6c16ab98ccd1bp-10'),
        'alpha4': float.fromhex('0x1.9f923241292e1p-16'),
        'z0': float.fromhex('-0x1.0000000000000p+0'),
        'z1': float.fromhex('0x1.555555555522dp-3'),
        'z2': float.fromhex('-0x1.1111110f76864p-7'),
        'z3': float.fromhex('0x1.a019edab5e264p-13'),
        'z4': float.fromhex('-0x1.717192fc4e237p-19'),
    },
    'CS16a': {
        'x1': float.fromhex('0x1.47ae147ae144dp-7'),
        'x2': float.fromhex('-0x1.510c536eca26fp-14'),
        'x3': float.fromhex('-0x1.b809353f901fbp-4'),
        'x4': float.fromhex('-0x1.ffa589db48c81p-4'),
        'x5': float.fromhex('0x1.5502d53221170p-10'),
        'x6': float.fromhex('-0x1.1219981bec85cp-16'),
        'x7': float.fromhex('0x1.dea16b5bdac9ap-18'),
        'alpha0': float.fromhex('0x1.0000000000000p+0'),
        'alpha1': float.fromhex('-0x1.ffffffffffff9p-2'),
        'alpha2': float.fromhex('0x1.ceccef9ee72bap-6'),
        'z0': float.fromhex('0x1.51eb851eb8522p-1'),
        'z1': float.fromhex('0x1.b4e81b4e8d96ap-9'),
        'z2': float.fromhex('-0x1.7e4b17e4d3304p-8'),
        'z3': float.fromhex('0x1.c661156c9dadfp-6'),
        'z4': float.fromhex('0x1.5c28f5c28f5a6p-2'),
        'z5': float.fromhex('-0x1.6e1cf5683f38dp-12'),
        'z6': float.fromhex('0x1.19921950ac3ebp-18'),
        'z7': float.fromhex('-0x1.623e3d9ec7717p-19'),
        'z8': float.fromhex('-0x1.92f9c63b2e509p-19'),
    },
    'CS24a': {
        'a01': float.fromhex('0x1.9226d1c522708p-2'),
        'a11': float.fromhex('-0x1.66d5f0366e118p-4'),
        'a21': float.fromhex('0x1.4176f33a209ffp-6'),
        'a31': float.fromhex('-0x1.1978b01bae9c0p-13'),
        'a02': float.fromhex('0x1.999999999999bp-3'),
        'a12': float.fromhex('-0x1.15afc399fee40p-1'),
        'a22': float.fromhex('0x1.bcfd4bf0995a8p-8'),
        'a32': float.fromhex('-0x1.e70ae3e1dfecep-16'),
        'a03': float.fromhex('0x1.5f0fd7683b398p-1'),
        'a13': float.fromhex('-0x1.a676fd9a4c077p-6'),
        'a23': float.fromhex('0x1.9f908ab8e570fp-13'),
        'a33': float.fromhex('-0x1.2780b04dff391p-20'),
        'a04': float.fromhex('0x0.0p+0'),
        'a14': float.fromhex('-0x1.421ad9798fcabp-5'),
        'a24': float.fromhex('0x1.761e7432c5eb1p-13'),
        'a34': float.fromhex('-0x1.1efb18629b23fp-20'),
        'z0': float.fromhex('-0x1.95cfbc8ffff23p-7'),
        'z1': float.fromhex('-0x1.fa4569b60dc3fp-5'),
        'z2': float.fromhex('0x1.e53c1dede8e7bp-12'),
        'z3': float.fromhex('-0x1.4d313a2e0a9b0p-17'),
        'z4': float.fromhex('0x1.43592b03fb06dp+0'),
        'z5': float.fromhex('0x1.48052d715ee13p-47'),
        'z6': float.fromhex('0x1.2b395b0b87cc6p-3'),
        'z7': float.fromhex('0x1.cbc9f1a11431ep-11'),
        'z8': float.fromhex('0x1.148ce60572e4cp-18'),
        'z9': float.fromhex('0x1.80637b88d9d32p-26'),
        'z10': float.fromhex('0x1.5a31bec1a47c2p-12'),
        'z11': float.fromhex('-0x1.02465628ffb08p-22'),
    },
    'CS24x': {
        'a01': float.fromhex('0x1.9226d1c522707p-2'),
        'a11': float.fromhex('-0x1.66d5f0366e10ep-4'),
        'a21': float.fromhex('0x1.4176f33a209ffp-6'),
        'a31': float.fromhex('-0x1.1978b01bae9bfp-13'),
        'a02': float.fromhex('0x1.999999999999ep-3'),
        'a12': float.fromhex('-0x1.15afc399fee42p-1'),
        'a22': float.fromhex('0x1.bcfd4bf0995aap-8'),
        'a32': float.fromhex('-0x1.e70ae3e1dfecfp-16'),
        'a03': float.fromhex('0x1.5f0fd7683b398p-1'),
        'a13': float.fromhex('-0x1.a676fd9a4c076p-6'),
        'a23': float.fromhex('0x1.9f908ab8e570ap-13'),
        'a33': float.fromhex('-0x1.2780b04dff388p-20'),
        'a04': float.fromhex('0x0.0p+0'),
        'a14': float.fromhex('-0x1.421ad9798fcafp-5'),
        'a24': float.fromhex('0x1.761e7432c5eafp-13'),
        'a34': float.fromhex('-0x1.1efb18629b244p-20'),
        'z0': float.fromhex('0x1.6d1df33893bacp+1'),
        'z1': float.fromhex('-0x1.e8389ccf2c587p-3'),
        'z2': float.fromhex('0x1.9b26d258000f2p-7'),
        'z3': float.fromhex('-0x1.0b2d03ff3666cp-15'),
        'z4': float.fromhex('-0x1.fa80ee6b541c5p+2'),
        'z5': float.fromhex('-0x1.d2ca3aaec3d67p-2'),
        'z6': float.fromhex('-0x1.2cbaafd6a38e5p+1'),
        'z7': float.fromhex('-0x1.5f646b3f659c9p-2'),
        'z8': float.fromhex('0x1.f174f0040e771p-9'),
        'z9': float.fromhex('-0x1.fa70e9ed9e714p-17'),
        'z10': float.fromhex('-0x1.16872b020c497p-6'),
        'z11': float.fromhex('0x1.07eed195532d3p-27'),
        'z12': float.fromhex('-0x1.de5326cfaae90p-36'),
        'z13': float.fromhex('0x1.d2ca3aaec3d69p-2'),
    },
}
