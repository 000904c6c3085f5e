// Generated once with numpy.random.default_rng(0x4650 + dim): a, b integers
// uniform on [-100, 100]; alpha uniform on [-pi, pi]. Frozen; do not regenerate.

pub(super) const A2: [[f64; 2]; 2] = [
    [-9.0, 4.0],
    [-31.0, -95.0],
];

pub(super) const B2: [[f64; 2]; 2] = [
    [67.0, -71.0],
    [93.0, -2.0],
];

pub(super) const ALPHA2: [f64; 2] = [-1.773778199676733, -0.7461544055037828];

pub(super) const A5: [[f64; 5]; 5] = [
    [-10.0, -26.0, -36.0, -58.0, 81.0],
    [70.0, -71.0, -55.0, 5.0, -45.0],
    [-19.0, -70.0, -81.0, 48.0, 6.0],
    [-20.0, -73.0, 50.0, -41.0, -13.0],
    [-85.0, 20.0, -48.0, -12.0, -89.0],
];

pub(super) const B5: [[f64; 5]; 5] = [
    [98.0, 76.0, -79.0, 83.0, -12.0],
    [4.0, 4.0, -98.0, 78.0, -3.0],
    [61.0, -32.0, 91.0, -29.0, -40.0],
    [-27.0, -49.0, -80.0, -92.0, -63.0],
    [36.0, 98.0, -60.0, -44.0, 24.0],
];

pub(super) const ALPHA5: [f64; 5] = [2.1012304860075055, -2.435825990675537, -2.135533377561554, -0.028307509858174207, 2.435280716913442];

pub(super) const A10: [[f64; 10]; 10] = [
    [-36.0, -40.0, -32.0, -48.0, -47.0, -90.0, 40.0, -63.0, -84.0, 30.0],
    [12.0, 42.0, 12.0, -94.0, 30.0, 22.0, 59.0, 86.0, -40.0, -21.0],
    [66.0, 83.0, -81.0, -40.0, -28.0, 60.0, 64.0, -51.0, -88.0, -30.0],
    [41.0, -32.0, 69.0, -93.0, 63.0, -97.0, 99.0, 19.0, -94.0, 87.0],
    [68.0, -14.0, -36.0, -36.0, 88.0, 72.0, -89.0, 51.0, 82.0, -78.0],
    [-37.0, 0.0, -53.0, -20.0, -1.0, 89.0, -12.0, 93.0, -74.0, -63.0],
    [-29.0, -19.0, -7.0, -19.0, -20.0, 94.0, -94.0, -46.0, 25.0, -91.0],
    [-86.0, -100.0, 72.0, 22.0, -47.0, 43.0, -63.0, -70.0, 33.0, 34.0],
    [-5.0, -99.0, -14.0, 90.0, -28.0, 4.0, -56.0, 7.0, 5.0, 44.0],
    [-22.0, -64.0, 83.0, 1.0, -5.0, 5.0, -24.0, -46.0, 57.0, 74.0],
];

pub(super) const B10: [[f64; 10]; 10] = [
    [26.0, -1.0, -91.0, -25.0, -35.0, -49.0, 85.0, 52.0, -75.0, -34.0],
    [-74.0, -81.0, -1.0, -89.0, 93.0, 61.0, -15.0, 85.0, -71.0, 72.0],
    [-67.0, 54.0, -52.0, -30.0, -29.0, 46.0, 31.0, 62.0, -85.0, 10.0],
    [16.0, 28.0, -56.0, -63.0, 1.0, 9.0, 97.0, -30.0, 30.0, 67.0],
    [87.0, 89.0, -46.0, -99.0, -1.0, 77.0, 39.0, 69.0, 80.0, -17.0],
    [47.0, 21.0, 6.0, 79.0, -93.0, 62.0, 69.0, -76.0, 79.0, -10.0],
    [5.0, -43.0, -37.0, -90.0, -11.0, 41.0, 64.0, -60.0, 20.0, -96.0],
    [-4.0, -69.0, 9.0, 24.0, 49.0, -95.0, -73.0, 75.0, -2.0, -62.0],
    [20.0, 22.0, 69.0, 18.0, 66.0, -12.0, 17.0, -76.0, -62.0, -39.0],
    [0.0, 35.0, 16.0, 81.0, 75.0, 95.0, 79.0, -28.0, -77.0, 93.0],
];

pub(super) const ALPHA10: [f64; 10] = [0.23264230252203788, 0.9505330125471358, -2.427886063136569, -2.815622409933124, -1.3210241528582063, -2.080906987798415, -1.445525456310326, 0.3705689289036287, -2.311565987862309, -2.363730559433895];
