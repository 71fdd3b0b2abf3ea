//! Generated by scripts/gen_sine_channel.py; do not edit.

use std::f64::consts::PI;

/// [u, u_x, u_y, u_xx, u_xy, u_yy, bilaplacian u] at (x, y).
#[allow(unused_parens, clippy::all)]
pub(crate) fn eval(x: f64, y: f64) -> [f64; 7] {
    let x0 = (PI * x);
    let x1 = x0.sin();
    let x2 = ((3.0_f64) * x0);
    let x3 = x2.sin();
    let x4 = ((5.0_f64) * x);
    let x5 = x4.sin();
    let x6 = ((7.0_f64) * y);
    let x7 = x6.sin();
    let x8 = (x5 * x7);
    let x9 = ((3.0_f64) + x8);
    let x10 = x.powi(2);
    let x11 = ((-1.0_f64) + x);
    let x12 = x11.powi(2);
    let x13 = (x10 * x12);
    let x14 = (x13 * x9);
    let x15 = x0.cos();
    let x16 = ((20.0_f64) * y);
    let x17 = ((20.0_f64) + x3 + ((-1.0_f64) * x16));
    let x18 = (x0 * x11);
    let x19 = ((-1.0_f64) * x1);
    let x20 = (x16 + x19);
    let x21 = x2.cos();
    let x22 = (x21 * x9);
    let x23 = (x17 * x20);
    let x24 = (x23 * x9);
    let x25 = ((2.0_f64) * x24);
    let x26 = x4.cos();
    let x27 = (x26 * x7);
    let x28 = (x11 * x);
    let x29 = ((6.25e-06_f64) * x28);
    let x30 = ((40.0_f64) * x9);
    let x31 = x6.cos();
    let x32 = (x31 * x5);
    let x33 = (x23 * x32);
    let x34 = ((6.25e-06_f64) * x13);
    let x35 = x17.powi(2);
    let x36 = x20.powi(2);
    let x37 = (x36 * x9);
    let x38 = (x35 * x37);
    let x39 = ((2.0_f64) * x38);
    let x40 = ((20.0_f64) * x27);
    let x41 = (x35 * x36);
    let x42 = (x41 * x);
    let x43 = (x11 * x41);
    let x44 = (x17 * x36);
    let x45 = (PI * x27);
    let x46 = (x21 * x45);
    let x47 = (x0 * x12);
    let x48 = (x17 * x37);
    let x49 = (x21 * x48);
    let x50 = ((24.0_f64) * x49);
    let x51 = (x10 * x11);
    let x52 = (PI * x51);
    let x53 = PI.powi(2);
    let x54 = (x35 * x9);
    let x55 = x15.powi(2);
    let x56 = (x1 * x20);
    let x57 = (x55 + x56);
    let x58 = (x53 * x57);
    let x59 = (x54 * x58);
    let x60 = x21.powi(2);
    let x61 = (x17 * x3);
    let x62 = (x61 + ((-1.0_f64) * x60));
    let x63 = (x15 * x18);
    let x64 = ((14.0_f64) * x32);
    let x65 = (x18 * x21);
    let x66 = ((80.0_f64) * x);
    let x67 = (x20 * x54);
    let x68 = ((200.0_f64) * x27);
    let x69 = (x20 * x35);
    let x70 = (x28 * x69);
    let x71 = ((80.0_f64) * x11);
    let x72 = (x26 * x31);
    let x73 = (x44 * x65);
    let x74 = ((800.0_f64) * x9);
    let x75 = ((560.0_f64) * x32);
    let x76 = (x41 * x8);
    let x77 = ((0.02_f64) * x10);
    let x78 = (x12 * x);
    let x79 = ((0.2_f64) * x27);
    let x80 = (x36 * x79);
    let x81 = (x35 * x79);
    let x82 = ((0.08_f64) * x28);
    let x83 = ((0.02_f64) * x12);
    let x84 = (x14 * x53);
    let x85 = (x15 * x21);
    let x86 = (x13 * x17);
    let x87 = (x15 * x47);
    let x88 = ((0.16_f64) * x17 * x9);
    let x89 = (x15 * x52);
    let x90 = ((0.0015_f64) * x27);
    let x91 = ((0.014_f64) * x32);
    let x92 = (x10 * x69);
    let x93 = (x17 * x22);
    let x94 = ((0.24_f64) * x93);
    let x95 = (x23 * x8);
    let x96 = (x13 * x95);
    let x97 = (x13 * x35);
    let x98 = (x32 * x53);
    let x99 = ((0.14_f64) * x72);
    let x100 = (x13 * x36);
    let x101 = (x13 * x32);
    let x102 = (x53 * x85);
    let x103 = ((0.0045_f64) * x46);
    let x104 = ((0.056_f64) * x33);
    let x105 = ((0.0018_f64) * x49);
    let x106 = ((0.168_f64) * x33);
    let x107 = ((0.0124_f64) * x8);
    let x108 = (PI * x11);
    let x109 = (PI * x13 * x15);
    let x110 = PI.powi(3);
    let x111 = ((5.0_f64) * y);
    let x112 = (x111 + x19);
    let x113 = (x110 * x112 * x15);
    let x114 = (x12 * x54);
    let x115 = ((0.0004_f64) * x113);
    let x116 = (x10 * x54);
    let x117 = ((5.0_f64) + x3 + ((-1.0_f64) * x111));
    let x118 = ((0.00015_f64) * x58);
    let x119 = (x35 * x58 * x90);
    let x120 = PI.powi(4);
    let x121 = (x120 * x14 * x85);
    let x122 = (x110 * x78);
    let x123 = ((0.0018_f64) * x57 * x93);
    let x124 = (x110 * x51);
    let x125 = (x15 * x62);
    let x126 = ((0.0054_f64) * x125 * x20 * x9);
    let x127 = ((2688000.0_f64) * x32);
    let x128 = ((235200.0_f64) * x8);
    let x129 = ((54880.0_f64) * x32);
    let u = ((-1.0_f64) * x14 * (y + ((-0.05_f64) * x1)).powi(2) * ((1.0_f64) + ((-1.0_f64) * y) + ((0.05_f64) * x3)).powi(2));
    let ux = (x23 * x29 * (((-1.0_f64) * x11 * x25) + ((-1.0_f64) * x25 * x) + ((-6.0_f64) * x18 * x20 * x22) + ((-1.0_f64) * x11 * x23 * x27 * x4) + ((2.0_f64) * PI * x11 * x15 * x17 * x9 * x)));
    let uy = (x23 * x34 * (((-7.0_f64) * x33) + ((-1.0_f64) * x17 * x30) + ((40.0_f64) * x20 * x9)));
    let uxx = (((-5e-05_f64) * x28 * x38) + ((-1.25e-05_f64) * x13 * x59) + ((-6.25e-06_f64) * x10 * x39) + ((-6.25e-06_f64) * x12 * x39) + ((-6.25e-06_f64) * x47 * x50) + ((-6.25e-06_f64) * x50 * x52) + ((-0.000375_f64) * x13 * x44 * x46) + ((-6.25e-06_f64) * x10 * x40 * x43) + ((-6.25e-06_f64) * x12 * x40 * x42) + ((0.00015625_f64) * x10 * x12 * x35 * x36 * x5 * x7) + ((0.0001125_f64) * x10 * x12 * x36 * x53 * x62 * x9) + ((5e-05_f64) * PI * x10 * x11 * x15 * x20 * x35 * x9) + ((5e-05_f64) * PI * x12 * x15 * x20 * x35 * x9 * x) + ((0.000125_f64) * PI * x10 * x12 * x15 * x20 * x26 * x35 * x7) + ((0.00015_f64) * x10 * x12 * x15 * x17 * x20 * x21 * x53 * x9));
    let uxy = ((-1.0_f64) * x29 * ((x42 * x64) + (x43 * x64) + (x66 * x67) + (x67 * x71) + (x68 * x70) + ((-1.0_f64) * x48 * x66) + ((-1.0_f64) * x48 * x71) + ((-120.0_f64) * x37 * x65) + ((42.0_f64) * x32 * x73) + ((240.0_f64) * x24 * x65) + ((-1.0_f64) * x28 * x44 * x68) + ((-1.0_f64) * x30 * x35 * x63) + ((-1.0_f64) * x63 * x64 * x69) + ((35.0_f64) * x28 * x41 * x72) + (x0 * x15 * x24 * x71)));
    let uyy = ((-1.0_f64) * x34 * (((-3200.0_f64) * x24) + ((-49.0_f64) * x76) + (x35 * x74) + (x36 * x74) + (x69 * x75) + ((-1.0_f64) * x44 * x75)));
    let f = (((-1.0_f64) * x96) + ((-0.00015_f64) * x38) + ((-1.0_f64) * x0 * x105) + ((-1.0_f64) * x104 * x87) + ((-1.0_f64) * x104 * x89) + ((-1.0_f64) * x105 * x108) + ((-1.0_f64) * x114 * x118) + ((-1.0_f64) * x116 * x118) + ((-1.0_f64) * x119 * x51) + ((-1.0_f64) * x119 * x78) + ((-1.0_f64) * x122 * x123) + ((-1.0_f64) * x122 * x126) + ((-1.0_f64) * x123 * x124) + ((-1.0_f64) * x124 * x126) + ((-1.0_f64) * x34 * ((11520000.0_f64) + ((2401.0_f64) * x76) + ((940800.0_f64) * x95) + ((3840000.0_f64) * x8) + (x127 * x20) + (x129 * x44) + ((-1.0_f64) * x127 * x17) + ((-1.0_f64) * x128 * x35) + ((-1.0_f64) * x128 * x36) + ((-1.0_f64) * x129 * x69))) + ((-1.0_f64) * x37 * x77) + ((-1.0_f64) * x37 * x82) + ((-1.0_f64) * x37 * x83) + ((-1.0_f64) * x42 * x90) + ((-1.0_f64) * x43 * x90) + ((-1.0_f64) * x47 * x94) + ((-1.0_f64) * x51 * x80) + ((-1.0_f64) * x51 * x81) + ((-1.0_f64) * x52 * x94) + ((-1.0_f64) * x54 * x77) + ((-1.0_f64) * x54 * x82) + ((-1.0_f64) * x54 * x83) + ((-1.0_f64) * x78 * x80) + ((-1.0_f64) * x78 * x81) + ((-1.0_f64) * x87 * x88) + ((-1.0_f64) * x88 * x89) + ((-1.0_f64) * x91 * x92) + ((-0.01921875_f64) * x13 * x76) + ((-0.0372_f64) * x102 * x96) + ((-0.018_f64) * x27 * x73) + ((-0.175_f64) * x101 * x44) + ((-0.056_f64) * x32 * x70) + ((-0.24_f64) * x84 * x85) + ((-0.6_f64) * x46 * x86) + ((-0.0006_f64) * x28 * x59) + ((-0.02_f64) * x14 * x58) + ((-1.0_f64) * x10 * x103 * x44) + ((-1.0_f64) * x103 * x12 * x44) + ((-1.0_f64) * x106 * x21 * x47) + ((-1.0_f64) * x106 * x21 * x52) + ((-1.0_f64) * x107 * x69 * x87) + ((-1.0_f64) * x109 * x23 * x99) + ((-1.0_f64) * x11 * x115 * x116) + ((-1.0_f64) * x11 * x92 * x99) + ((-1.0_f64) * x114 * x115 * x) + ((-1.0_f64) * x12 * x69 * x91) + ((-1.0_f64) * x69 * x78 * x99) + ((-0.063_f64) * x100 * x3 * x98) + ((-0.0185_f64) * x109 * x27 * x69) + ((-0.0108_f64) * x117 * x121 * x20) + ((-0.084_f64) * x101 * x102 * x20) + ((-0.36_f64) * x20 * x3 * x84) + ((-0.007_f64) * x1 * x97 * x98) + ((-0.0012_f64) * x112 * x121 * x17) + ((-0.4_f64) * x15 * x45 * x86) + ((-0.001_f64) * x113 * x27 * x97) + ((-1.0_f64) * x107 * x108 * x15 * x92) + ((-0.0279_f64) * x100 * x53 * x62 * x8) + ((-0.0010125_f64) * x120 * x13 * x37 * (x61 + ((-4.0_f64) * x60) + ((3.0_f64) * x3.powi(2)))) + ((0.08_f64) * x10 * x17 * x20 * x9) + ((0.08_f64) * x12 * x17 * x20 * x9) + ((-0.0135_f64) * x110 * x125 * x13 * x20 * x27) + ((-0.42_f64) * PI * x13 * x21 * x23 * x72) + ((-0.0045_f64) * x110 * x21 * x27 * x57 * x86) + ((0.25_f64) * x10 * x12 * x35 * x5 * x7) + ((0.25_f64) * x10 * x12 * x36 * x5 * x7) + ((0.014_f64) * x10 * x17 * x31 * x36 * x5) + ((0.014_f64) * x12 * x17 * x31 * x36 * x5) + ((0.32_f64) * x11 * x17 * x20 * x9 * x) + ((0.18_f64) * x10 * x12 * x53 * x62 * x9) + ((0.00135_f64) * x10 * x36 * x53 * x62 * x9) + ((0.00135_f64) * x12 * x36 * x53 * x62 * x9) + ((0.0031_f64) * x10 * x35 * x36 * x5 * x7) + ((0.0031_f64) * x12 * x35 * x36 * x5 * x7) + ((0.04_f64) * x1 * x10 * x12 * x17 * x53 * x9) + ((1.25e-05_f64) * x10 * x12 * x120 * x35 * x9 * (x56 + ((-3.0_f64) * x1.powi(2)) + ((4.0_f64) * x55))) + ((0.08_f64) * PI * x10 * x11 * x15 * x20 * x9) + ((0.08_f64) * PI * x12 * x15 * x20 * x9 * x) + ((0.0006_f64) * PI * x11 * x15 * x20 * x35 * x9) + ((0.0006_f64) * PI * x15 * x20 * x35 * x9 * x) + ((0.8_f64) * x10 * x11 * x17 * x20 * x26 * x7) + ((0.8_f64) * x12 * x17 * x20 * x26 * x7 * x) + ((0.175_f64) * x10 * x12 * x20 * x31 * x35 * x5) + ((0.14_f64) * x10 * x11 * x17 * x26 * x31 * x36) + ((0.14_f64) * x12 * x17 * x26 * x31 * x36 * x) + ((0.056_f64) * x11 * x17 * x31 * x36 * x5 * x) + ((0.48_f64) * PI * x10 * x11 * x20 * x21 * x9) + ((0.48_f64) * PI * x12 * x20 * x21 * x9 * x) + ((0.0054_f64) * x11 * x36 * x53 * x62 * x9 * x) + ((0.00135_f64) * x10 * x12 * x120 * x57 * x62 * x9) + ((0.0124_f64) * x11 * x35 * x36 * x5 * x7 * x) + ((0.0185_f64) * x10 * x11 * x26 * x35 * x36 * x7) + ((0.0185_f64) * x12 * x26 * x35 * x36 * x7 * x) + ((0.2_f64) * PI * x10 * x12 * x15 * x20 * x26 * x7) + ((0.0015_f64) * PI * x10 * x15 * x20 * x26 * x35 * x7) + ((0.0015_f64) * PI * x12 * x15 * x20 * x26 * x35 * x7) + ((1.2_f64) * PI * x10 * x12 * x20 * x21 * x26 * x7) + ((0.07_f64) * PI * x10 * x12 * x15 * x26 * x31 * x35) + ((0.028_f64) * PI * x10 * x11 * x15 * x31 * x35 * x5) + ((0.028_f64) * PI * x12 * x15 * x31 * x35 * x5 * x) + ((0.014_f64) * x10 * x12 * x17 * x31 * x5 * x53 * x57) + ((0.0018_f64) * x10 * x15 * x17 * x20 * x21 * x53 * x9) + ((0.0018_f64) * x12 * x15 * x17 * x20 * x21 * x53 * x9) + ((0.21_f64) * PI * x10 * x12 * x21 * x26 * x31 * x36) + ((0.084_f64) * PI * x10 * x11 * x21 * x31 * x36 * x5) + ((0.084_f64) * PI * x12 * x21 * x31 * x36 * x5 * x) + ((0.0135_f64) * x10 * x11 * x26 * x36 * x53 * x62 * x7) + ((0.0135_f64) * x12 * x26 * x36 * x53 * x62 * x7 * x) + ((0.0108_f64) * x10 * x11 * x110 * x117 * x21 * x36 * x9) + ((0.0108_f64) * x110 * x117 * x12 * x21 * x36 * x9 * x) + ((0.0031_f64) * x10 * x12 * x35 * x5 * x53 * x57 * x7) + ((0.126_f64) * x10 * x12 * x20 * x31 * x5 * x53 * x62) + ((0.006_f64) * PI * x11 * x15 * x20 * x26 * x35 * x7 * x) + ((0.0072_f64) * x11 * x15 * x17 * x20 * x21 * x53 * x9 * x) + ((0.084_f64) * x10 * x12 * x15 * x17 * x21 * x31 * x5 * x53) + ((0.027_f64) * x10 * x110 * x117 * x12 * x21 * x26 * x36 * x7) + ((0.0372_f64) * PI * x10 * x11 * x17 * x21 * x36 * x5 * x7) + ((0.0372_f64) * PI * x12 * x17 * x21 * x36 * x5 * x7 * x) + ((0.0555_f64) * PI * x10 * x12 * x17 * x21 * x26 * x36 * x7) + ((0.018_f64) * x10 * x11 * x15 * x17 * x20 * x21 * x26 * x53 * x7) + ((0.018_f64) * x12 * x15 * x17 * x20 * x21 * x26 * x53 * x7 * x));
    [u, ux, uy, uxx, uxy, uyy, f]
}
