//! Frozen reference values from tests/oracle/weights_oracle.py (mpmath).

pub const BDF2_POW07: [f64; 6] = [1.3282012399433343, -1.2396544906137785, 0.061982724530688926, -0.019283514298436555, -0.017883163855335806, -0.013680276000862277];
pub const ADAMS2_OMEGA05: [f64; 8] = [0.75, 0.625, 0.40625, 0.328125, 0.283203125, 0.2529296875, 0.230712890625, 0.2135009765625];
pub const L1_GF_09_ALPHA05: f64 = 0.3223210916156161;
pub const L1_GF_I_ALPHA3: (f64, f64) = (1.1760042515839082, -0.3741237734452512);
pub const L1_GF_I_ALPHA7: (f64, f64) = (1.1787534777999822, -0.8289956054209039);
pub const L1_MU: &[(f64, usize, f64)] = &[
    (0.3, 1, -0.41325027616686105),
    (0.3, 2, -0.10052433618312072),
    (0.3, 7, -0.0185107866140174),
    (0.3, 100, -0.0005805489856546307),
    (0.3, 4999, -3.5915339459659903e-06),
    (0.3, 100000, -7.308496596513995e-08),
    (0.5, 1, -0.6609892125852944),
    (0.5, 2, -0.10874902850426917),
    (0.5, 7, -0.015329882459701004),
    (0.5, 100, -0.0002821036076989624),
    (0.5, 4999, -7.981239960069562e-07),
    (0.5, 100000, -8.920620581042624e-09),
    (0.9, 1, -0.9756932635831027),
    (0.9, 2, -0.028826119563154843),
    (0.9, 7, -0.0023676607548415644),
    (0.9, 100, -1.4994147461489656e-05),
    (0.9, 4999, -8.872048017119944e-09),
    (0.9, 100000, -2.991588365120557e-11),
];
