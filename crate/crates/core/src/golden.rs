//! Published classification sets and gate quotients, kept as fixture data
//! for golden-check mode. Identifiers follow the `theorem` subcommand ids.

/// lemma1: `m <= 153` with `lambda_6` and `lambda_7` both integral.
pub const LEMMA1_M: &[u32] = &[
    5, 8, 15, 19, 35, 40, 41, 42, 50, 51, 52, 55, 57, 59, 60, 63, 65, 74, 75, 76, 80, 86, 90, 93,
    100, 101, 104, 105, 107, 118, 125, 127, 129, 130, 135, 143, 144, 150, 151,
];

/// thm4: members of [`LEMMA1_M`] with `lambda_8` also integral.
pub const LAMBDA8_CANDIDATES: &[u32] = &[8, 42, 63, 75, 130];

/// thm2: block-against-block eliminations at strength 7.
pub const THM2_ELIMINATED: &[u32] = &[8, 40, 42, 50, 74, 76, 80, 86, 100, 130, 144, 150];

/// thm3: eliminations against a weight `4m + 8` codeword at strength 7.
pub const THM3_ELIMINATED: &[u32] = &[5, 19, 35, 41, 51, 65, 75, 101, 129];

/// thm1: the `m` for which a support 7-design is still possible.
pub const THM1_SURVIVORS: &[u32] = &[
    15, 52, 55, 57, 59, 60, 63, 90, 93, 104, 105, 107, 118, 125, 127, 135, 143, 151,
];

/// thm4: no support 8-design survives.
pub const THM4_SURVIVORS: &[u32] = &[];

/// thm2 quotients `F(m, 4m + 4; [0, 2, ..., 12]) / 645120`.
pub const THM2_QUOTIENTS: &[(u32, &str)] = &[
    (8, "1569595833/8"),
    (40, "69722676263111828528771787666297086782790166251961/4"),
    (42, "7413717557642396579773804378982932177616748595565925/2"),
    (
        50,
        "51322358900999864497776773019002155555828915534612183899278199/8",
    ),
    (
        74,
        concat!(
            "4826425086761300475471211432388832310639106344039001327412238558724953",
            "1646783997099951125/4",
        ),
    ),
    (
        76,
        concat!(
            "1729752522331902361960672610693505143217216632547079956724375667422498",
            "6310548399405901291385/8",
        ),
    ),
    (
        80,
        concat!(
            "2735926956163251349163934164382847359509149969938275077530119649554210",
            "00133137628599208064366065/4",
        ),
    ),
    (
        86,
        concat!(
            "7441775672567300993698768020803055388930557285779322398149648475271662",
            "34593936158833143382070818871425/2",
        ),
    ),
    (
        100,
        concat!(
            "1361289868407320005013969576644851173644323050199159145487571385459755",
            "9161850934989081846304372757198545374868637953809/8",
        ),
    ),
    (
        130,
        concat!(
            "3189707480435553179722174456102031263888330943653476769079966443112832",
            "9484406261691394652221319496059344524071376846899299051945557430274425",
            "744716671055/8",
        ),
    ),
    (
        144,
        concat!(
            "1035070272428284277890857561402251586588512886310681236839638328732304",
            "2394869115911885863957545089413982715426242296805379140636613285064226",
            "3742190215236965412560306275/8",
        ),
    ),
    (
        150,
        concat!(
            "2251791376314509322546125572658872402649324513203532486390712693421420",
            "4389242312543348264030380202843824779325684442954468181050200484957547",
            "6006319668579289958493743350895465/4",
        ),
    ),
];

/// thm3 quotients `F(m, 4m + 8; [0, 2, ..., 12]) / 645120`.
pub const THM3_QUOTIENTS: &[(u32, &str)] = &[
    (5, "9009/4"),
    (19, "10290542185356908976248643/8"),
    (35, "240192525434759794880275676371011296919815805/8"),
    (41, "1229066981776753671012029436288037892461385328646335/4"),
    (
        51,
        "836449644579567992045815972312879647652910128602615298771389885/8",
    ),
    (
        65,
        concat!(
            "7297517420765476798210927291741168574571843851066613959815610026301949",
            "797750545/8",
        ),
    ),
    (
        75,
        concat!(
            "7131758849931063141943059052599195584602145213990980091936108740133241",
            "99822838428254310609/4",
        ),
    ),
    (
        101,
        concat!(
            "9554136072132181933335541526880816820634570464534400782829537866733344",
            "5530368924972096458449177337659658397691862895305/4",
        ),
    ),
    (
        129,
        concat!(
            "2623077879114379456088341818957543990169676106068096658454412021069910",
            "2593332231931142357704464444995183052596051684883337260435879131320600",
            "22892602625/8",
        ),
    ),
];

/// thm4: published `F(63, 256; [0, 2, ..., 14]) / 10321920`.
pub const THM4_M63_QUOTIENT: &str = concat!(
    "-16809515472136742134534321134853418244406436165053567105402493489903309445518999",
    "/1792",
);

/// Which stage set a golden entry is compared against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StageColumn {
    /// Members passing the `lambda` filter at the stage.
    Candidates,
    /// Members also passing every gate at the stage.
    Survivors,
}

/// One published stage set: strength `t`, the column it describes, members.
pub type StageSet = (u32, StageColumn, &'static [u32]);

/// thm5.1, family `24m+8`.
pub const THM5_1_STAGES: &[StageSet] = &[
    (
        4,
        StageColumn::Survivors,
        &[15, 35, 45, 58, 75, 85, 90, 95, 113, 115, 120, 125],
    ),
    (6, StageColumn::Candidates, &[58, 90, 113]),
    (7, StageColumn::Survivors, &[58]),
    (8, StageColumn::Survivors, &[]),
];

/// thm5.2, family `24m+16`.
pub const THM5_2_STAGES: &[StageSet] = &[
    (
        2,
        StageColumn::Survivors,
        &[
            5, 10, 20, 23, 25, 35, 44, 45, 50, 55, 60, 70, 72, 75, 79, 80, 85, 93, 95, 110, 118,
            120, 121, 123, 125, 130, 142, 144, 145, 149, 150, 155, 156, 157, 160, 163,
        ],
    ),
    (
        4,
        StageColumn::Survivors,
        &[10, 79, 93, 118, 120, 123, 125, 142],
    ),
    (
        5,
        StageColumn::Survivors,
        &[79, 93, 118, 120, 123, 125, 142],
    ),
    (6, StageColumn::Survivors, &[]),
];
