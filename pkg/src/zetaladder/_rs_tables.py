"""Frozen Riemann-Siegel remainder tables; generated by tools/gen_rs_tables.py."""

# Chebyshev coefficients on [-1, 1] of the complex remainder polynomials Q_k,
# as (real, imag) pairs.
RS_CHEB = (
    (
        (0.3213336431198842, -0.23125931510545775),
        (4.7167275543986704e-95, 1.0898027021402425e-94),
        (0.13598649999892753, 0.026103847727723426),
        (3.05581403774352e-95, 7.336016610924667e-95),
        (0.0053693029096701424, 0.013023438609274502),
        (1.2126515539878632e-95, 3.2182949312365175e-95),
        (-0.0006871907648168307, 0.0008121388437836304),
        (2.4430302386827715e-96, 8.461870667249994e-96),
        (-6.234110940160338e-05, -1.842677828475507e-05),
        (4.692256328288715e-98, 1.0757864387659824e-96),
        (-2.882299853391524e-07, -3.3415361559559255e-06),
        (-5.23848323167126e-98, 2.1791301585163242e-98),
        (1.364033714790226e-07, -6.246426789729318e-08),
        (-1.6938650704568092e-99, -1.9324262514768693e-99),
        (4.038976529750235e-09, 4.3404031553369765e-09),
        (5.306588681243312e-101, -8.737480246603958e-101),
        (-1.0442304034434827e-10, 1.822092832998546e-10),
        (3.510245015988597e-102, 9.236198050889478e-103),
        (-6.557780927369764e-12, -1.5730670012233549e-12),
        (1.974324299703686e-105, 1.1645391722166646e-103),
        (-7.103993614043593e-15, -1.9802145967196216e-13),
        (-3.2794540911665936e-105, 9.390008126479843e-106),
        (5.135850678965581e-15, -1.562068204433929e-15),
        (-4.647637625721122e-107, -7.932399549796967e-107),
        (6.987299409759187e-17, 1.1546206965943327e-16),
        (1.6454898851245698e-108, -1.600586613165718e-108),
        (-2.2420593669761442e-18, 2.2351892996190117e-18),
    ),
    (
        (7.81239968615027e-95, 3.249549120839574e-94),
        (-0.005348956960501501, 0.031063399563559597),
        (1.0608442064354132e-94, 4.934596404555598e-94),
        (-0.008585325621688941, 0.005094427800188114),
        (2.4181299822783564e-95, 2.0653735667465102e-94),
        (-0.0013966055748942355, -0.0008152700690771873),
        (-7.546051604382186e-96, 3.911022039816225e-95),
        (1.8187826859637523e-05, -0.000173219928082098),
        (-3.945065840888962e-96, 8.29204223404183e-97),
        (1.3554477615575444e-05, -3.7640841882372056e-06),
        (-1.6678551888491788e-97, -2.6394585357071194e-97),
        (5.241874933376387e-07, 7.447726230882505e-07),
        (1.2315704156176003e-98, -1.5225877449519265e-98),
        (-2.943233583263786e-08, 3.9534332385157536e-08),
        (9.60697484515951e-100, 3.785098670870488e-100),
        (-2.1614836342513896e-09, -7.698412127866308e-10),
        (-4.1498818928830595e-102, 4.680854082070774e-101),
        (5.684795794136856e-12, -9.364779902653483e-11),
        (-1.8505869389134925e-102, 3.4365930990322047e-103),
        (3.3499169551776637e-12, -7.040056068997756e-13),
        (-2.8873562045288396e-104, -6.085266318893614e-104),
        (5.0399988264042373e-14, 1.009458592173895e-13),
        (1.6784944405580978e-105, -1.3896277778540534e-105),
        (-2.5762440046110583e-15, 2.2083035877525047e-15),
        (5.160140310162029e-107, 3.844794793264122e-107),
        (-7.608477235918485e-17, -5.4977693375988655e-17),
        (-6.968342570873936e-109, 1.603543216816466e-108),
        (9.309732416843551e-19, -2.2175745969643583e-18),
    ),
    (
        (0.0008062649450136266, 0.000507505735145679),
        (-1.5741447778723475e-94, 5.077553711756326e-94),
        (-0.0010678386839406808, 0.00023320506594892582),
        (-1.269514745663048e-94, 1.887570476439834e-94),
        (7.20312836401133e-05, -0.0007316765753764435),
        (-4.918742615900225e-95, 4.487773208306328e-96),
        (0.00017888714160718577, -3.33196908280784e-05),
        (-2.5787764979599798e-96, -5.89000959135685e-96),
        (1.2562235544982276e-05, 2.250010559797045e-05),
        (5.708701402687945e-97, -5.386032703134799e-97),
        (-1.7324902235286654e-06, 1.8811948296069174e-06),
        (6.214593072119057e-98, 3.3585503311866296e-98),
        (-1.7696084235200776e-07, -8.371693519443259e-08),
        (-9.876063635416153e-100, 4.9476615291880024e-99),
        (1.8798066880876365e-09, -1.2069786919364028e-08),
        (-2.97364721765488e-100, 2.5217373820391197e-101),
        (6.394517496248818e-10, -7.658147828136574e-11),
        (-5.193779114373066e-102, -1.4136499804388479e-101),
        (1.0932092239801457e-11, 2.7314367490765858e-11),
        (5.441259701283846e-103, -3.782657454917729e-103),
        (-9.577271335252073e-13, 7.003552290764298e-13),
        (1.94613355811649e-104, 1.7015488302186027e-104),
        (-3.281959490409641e-14, -2.7549789526372564e-14),
        (-4.205424388393009e-106, 8.021964423109539e-106),
        (6.296832999357091e-16, -1.2523508811571315e-15),
        (-2.787032754446781e-107, -7.280074162494927e-108),
        (4.0707794399111074e-17, 1.0014353779777957e-17),
        (2.9823340546258476e-110, -8.38244367478409e-109),
        (-2.724113734927043e-20, 1.1546944820000944e-18),
    ),
    (
        (-6.241844455534123e-95, 8.034146385725708e-95),
        (6.738150201437926e-05, 0.00045522179726347574),
        (-8.038348569185624e-95, 7.876058169467993e-95),
        (-9.92797896861426e-05, -0.00018052105368463335),
        (-1.221305423310786e-95, 1.880178559437745e-96),
        (6.194634644718518e-05, 1.9202358298481887e-05),
        (1.9273468042496053e-96, -3.0959285514949076e-96),
        (-9.611598369258397e-06, 1.7190624328456317e-05),
        (8.35918608360692e-97, 4.2318008715606404e-97),
        (-3.275573272876303e-06, -1.270123183289571e-06),
        (-2.880446947137531e-98, 1.3119217540838088e-97),
        (6.095129031852685e-08, -4.1336562313116523e-07),
        (-1.38383417074148e-98, 6.268485604414489e-100),
        (3.687846572469346e-08, -3.620822781829867e-09),
        (-3.3187425785512037e-100, -1.0600983814204534e-99),
        (8.849929198451275e-10, 2.4650141656284817e-09),
        (6.182460542772856e-101, -3.8298947802168685e-101),
        (-1.280881586939252e-10, 8.53666206712407e-11),
        (2.8774166285523515e-102, 2.80579045291468e-102),
        (-5.6906525913582855e-12, -5.254760512902909e-12),
        (-9.827417785599622e-104, 1.6497978117045034e-103),
        (1.678279039364952e-13, -2.96709793356685e-13),
        (-7.69626854933432e-105, -2.4578565334416672e-105),
        (1.2776011811078578e-14, 3.819136966526049e-15),
        (2.6672746293428413e-107, -3.024037965654441e-106),
        (-3.401479493287142e-17, 4.683271378492121e-16),
        (1.0221793325841294e-107, -1.3020748385120153e-108),
        (-1.4891795234101155e-17, 2.090706531458788e-18),
        (1.0496435877253457e-109, 3.011474003071142e-109),
        (-1.4972760625954416e-19, -4.1554044199897377e-19),
    ),
    (
        (8.727785659812433e-05, 8.832225016335906e-06),
        (-6.612196750387362e-95, 5.876925499301839e-95),
        (-0.00011212307882541643, -7.38378826189921e-06),
        (-2.5624286145620167e-95, 6.643464441870338e-96),
        (2.999041064596704e-05, -7.675665704425289e-06),
        (7.297318390140713e-97, -1.1062598524931656e-96),
        (-4.360356786778794e-06, 8.329876780690683e-06),
        (2.2147649980587393e-97, 4.500488413414149e-97),
        (-1.2338088232531198e-06, -1.9698833977932305e-06),
        (-1.1974283908702646e-97, 4.461368827004071e-98),
        (4.230741943633238e-07, -1.924282926687924e-07),
        (-9.304508431480824e-99, -1.898470164684804e-98),
        (3.134668741609217e-08, 5.597762018715574e-08),
        (1.996030497515799e-99, -1.457618272484194e-99),
        (-5.069972629355671e-09, 4.046981052175935e-09),
        (1.632894623017564e-100, 1.48450031976472e-100),
        (-3.9138835757305685e-10, -3.3211175768151235e-10),
        (-7.973357159931389e-102, 1.3721580206934822e-101),
        (1.592882239103156e-11, -2.924130313143932e-11),
        (-9.070554545511196e-103, -2.937596409901458e-103),
        (1.7526693834815522e-12, 5.244094827615194e-13),
        (4.984198376531987e-105, -4.887855960994189e-104),
        (-7.248726631822536e-15, 8.685974768435566e-14),
        (2.202425484062353e-105, -2.3609667699008627e-106),
        (-3.638853424725999e-15, 4.45280493207807e-16),
        (2.7176197000114717e-107, 8.445279827691055e-107),
        (-4.3869590425798414e-17, -1.308682422161484e-16),
        (-2.7863089071173763e-108, 1.5648363324200445e-108),
        (4.078955565115289e-18, -2.3429811045041772e-18),
        (-6.798978223680611e-110, -7.943578134687423e-110),
        (9.606023722778762e-20, 1.1053569819392202e-19),
    ),
    (
        (-1.4027854623507692e-95, 1.6868801586077455e-95),
        (-4.2664237878863787e-05, 6.278445314067544e-05),
        (-1.528933642488458e-95, 1.4478261748887914e-95),
        (7.168590017435783e-06, -1.618793846494732e-05),
        (-2.9706982841212387e-96, -3.856723430040977e-98),
        (1.4770485801079255e-07, 5.425069705381589e-06),
        (1.8539140272957921e-97, 2.371259786768323e-97),
        (-9.977639806912242e-07, -1.1446594276052513e-06),
        (-7.963971360768279e-98, 1.1591649182797635e-98),
        (3.287139350427373e-07, -4.1294240484872916e-08),
        (4.259741093456595e-99, -1.7555757973079975e-98),
        (-1.5225097093275844e-08, 6.176566792624337e-08),
        (3.0047595831267567e-99, 1.0909740968920136e-99),
        (-9.067792141610654e-09, -3.1517388228601373e-09),
        (-1.2059437012746187e-100, 3.9609020854854795e-100),
        (2.9645597529675046e-10, -1.0408927080781558e-09),
        (-4.0171970862175106e-101, -6.86822504163525e-102),
        (9.365825087269615e-11, 1.434219946102219e-11),
        (3.06675104566539e-104, -3.198362130930172e-102),
        (3.785310269962761e-14, 6.7282496134103174e-12),
        (2.049554117930504e-103, -3.430569156347155e-104),
        (-3.9451570031688773e-13, 7.121850541006836e-14),
        (3.923396617105029e-105, 1.0803591231317388e-104),
        (-7.216526440204402e-15, -1.9247103134574247e-14),
        (-4.759884322023324e-106, 2.8110962751506664e-106),
        (7.922820225857693e-16, -4.766819378553165e-16),
        (-1.5474501693713796e-107, -1.7687184363175505e-107),
        (2.456013148354967e-17, 2.7724891521070185e-17),
        (5.54127934307991e-109, -7.024821150893868e-109),
        (-8.2358756947143335e-19, 1.053475052943202e-18),
    ),
    (
        (4.99697964628067e-06, 7.923478660057927e-06),
        (-1.384068584269181e-95, 1.0416357749963345e-95),
        (-6.817500089821489e-06, -9.727180723416277e-06),
        (-1.6727686241899753e-96, 1.4275358045688354e-96),
        (2.5941560808344973e-06, 2.17528473175864e-06),
        (-7.389854970191749e-98, 1.085706624677319e-97),
        (-9.903298745048154e-07, -3.3551861043683095e-07),
        (-5.340746410850844e-98, 1.6844472185898617e-98),
        (2.403541229149782e-07, -7.824087922605641e-08),
        (4.236618607975369e-99, -1.399092605699771e-98),
        (-1.875767855173451e-08, 4.9758349157895197e-08),
        (2.1033970704441246e-99, 1.9823692601967603e-99),
        (-6.2541243988609864e-09, -7.108101629888801e-09),
        (-4.2638240817877844e-100, 2.432298039853487e-100),
        (1.3006563158930854e-09, -6.423205821100284e-10),
        (-2.7398222703470727e-101, -6.12914556284366e-101),
        (6.71104997839384e-11, 1.6299963079330727e-10),
        (6.447533190643108e-102, -3.096746903692315e-102),
        (-1.525910168082653e-11, 7.057896103318425e-12),
        (3.129422536582874e-103, 5.205361277116488e-103),
        (-6.591009964182985e-13, -1.1151779388817417e-12),
        (-3.3279006388397735e-104, 2.6347734930909544e-104),
        (6.544607589212215e-14, -5.134575362229414e-14),
        (-1.8296094262087785e-105, -1.7178414590212082e-105),
        (3.3194222319609e-15, 3.137145147700213e-15),
        (7.206880429897414e-107, -1.0616078409632945e-106),
        (-1.2343547152307857e-16, 1.806217519822324e-16),
        (5.23763053690044e-108, 2.4239610409627108e-108),
        (-8.415408621535363e-18, -3.929638649152541e-18),
        (-6.128568462202929e-110, 2.2327841187841354e-109),
        (9.505600068483883e-20, -3.4093442275437434e-19),
    ),
    (
        (-5.439568512737187e-96, 3.3569646519527195e-96),
        (-6.02378147435824e-06, 3.0323637543481373e-06),
        (-5.633547353140746e-96, 1.9419754501049537e-96),
        (1.9021746621197728e-06, -7.895731142191453e-07),
        (8.098967783958783e-99, 6.523197432055834e-98),
        (-6.703522878007942e-07, 3.4274006682327276e-07),
        (-3.4907914317217346e-98, 2.978452250322357e-98),
        (1.3353938617901654e-07, -1.4882343405927713e-07),
        (8.412732409111585e-100, -1.1147270353624031e-98),
        (-5.3150633820585934e-09, 4.47248525919797e-08),
        (1.9123540322017234e-99, 1.9107328987324757e-99),
        (-5.668755724116999e-09, -6.93549069266362e-09),
        (-4.927448062957019e-100, 1.396242357795531e-100),
        (1.517470322422568e-09, -1.8168178328851847e-10),
        (9.584918526529004e-102, -7.996165182275635e-101),
        (-6.06024287676069e-11, 2.1953533427480766e-10),
        (1.021957102688143e-101, 3.847354983078376e-102),
        (-2.5607700890405674e-11, -1.2841192807809346e-11),
        (-5.291403003714023e-103, 1.098543819558105e-102),
        (1.4400292740945475e-12, -2.535051019253477e-12),
        (-1.000378525463099e-103, -4.675788314442749e-104),
        (2.1357026578094154e-13, 1.1189162728040419e-13),
        (2.9559129988444417e-105, -7.692555670908008e-105),
        (-6.445523626834469e-15, 1.52705696739466e-14),
        (5.007741114249854e-106, 1.3449835108800412e-106),
        (-9.300350052621329e-16, -2.75000333420897e-16),
        (-3.855656756224202e-108, 2.782272646400307e-107),
        (7.773979026353525e-18, -4.8658599739654624e-17),
        (-1.3329894228897306e-108, -1.112511961594683e-111),
        (2.209271782421867e-18, 4.18990377679662e-20),
    ),
    (
        (6.487328616006897e-07, 1.039115474389217e-06),
        (-4.057452299621774e-96, 3.0714258511628706e-96),
        (-6.265688277467356e-07, -1.4151353877729023e-06),
        (-1.226936088745206e-96, 2.3838147037077837e-97),
        (-2.6615564984330187e-08, 5.075174815856342e-07),
        (-4.635066070055577e-100, 2.851314576135738e-98),
        (-5.7326906712618684e-09, -1.6273020314173394e-07),
        (-3.8796293691786125e-99, -7.645752671032023e-99),
        (1.569195998197359e-08, 3.60109683310732e-08),
        (2.0268855236412792e-99, 1.1451836549780688e-99),
        (-6.923724779039488e-09, -4.753602633402842e-09),
        (-4.94354955930176e-100, 1.441840385086819e-100),
        (1.5569016454586366e-09, -2.2106570331023125e-10),
        (2.7757300339970942e-101, -9.047665019220321e-101),
        (-1.24398201254528e-10, 2.2823719161937877e-10),
        (1.0456670016988403e-101, 9.633625338656794e-102),
        (-2.10752216459028e-11, -3.104757612274429e-11),
        (-1.6278162144728068e-102, 8.651949343270101e-103),
        (4.5324641280432486e-12, -1.3523109899860694e-12),
        (-5.830016293080378e-104, -1.986344326971421e-103),
        (6.980997426853795e-14, 4.964928589664397e-13),
        (1.9137677617241445e-104, -3.942847777499263e-105),
        (-4.368695003528371e-14, 4.3565975496743396e-15),
        (3.118278308251618e-106, 1.5074795638159382e-105),
        (-4.08612750020013e-16, -3.1797382649675508e-15),
        (-9.907322660385207e-107, 2.6042564072403525e-107),
        (1.94971453844343e-16, -3.919697989393652e-17),
        (-1.968155558707667e-108, -5.516237280887848e-108),
        (3.1073409947790343e-18, 1.0214886704997213e-17),
        (2.634495758951867e-109, -1.269407810686684e-109),
        (-4.625884345981157e-19, 2.004907659432989e-19),
    ),
    (
        (-1.251714468741108e-96, 1.0030601976228203e-96),
        (-1.4984379086176e-06, 5.838125313879062e-07),
        (-7.841163151222994e-97, 7.005068479687472e-97),
        (3.4987475471947326e-07, 5.677455948640961e-08),
        (-1.4342554974105568e-97, 4.005802863555027e-98),
        (-1.0937407545029294e-07, -6.712942178793759e-08),
        (-6.067502445806414e-99, -2.2246915041591523e-99),
        (3.2164458626507764e-08, 1.374313817433187e-08),
        (1.9724862495932695e-99, -3.565406861035504e-101),
        (-7.96025949985519e-09, -5.040270172084152e-10),
        (-4.1249642266076783e-100, 2.681273441913185e-100),
        (1.4491708367673342e-09, -6.98404340691331e-10),
        (2.405866126041374e-101, -9.91803980033095e-101),
        (-1.1839688400047941e-10, 2.619831998435245e-10),
        (1.1323944547169175e-101, 1.388436773857464e-101),
        (-1.951358583176291e-11, -4.144640897847252e-11),
        (-2.585020205758875e-102, 4.883638770458141e-103),
        (6.41167388550378e-12, 6.774189779267643e-13),
        (6.742319715938007e-104, -3.209160859822705e-103),
        (-3.843473862539318e-13, 7.038019326218071e-13),
        (3.153446231835136e-104, 1.7170433748719684e-104),
        (-6.372845773231763e-14, -5.858554581784549e-14),
        (-2.1438056166586427e-105, 2.676422390742263e-105),
        (5.9993224851435744e-15, -5.144028261667658e-15),
        (-2.0441621075105705e-106, -1.9168790445741326e-106),
        (3.803976707819313e-16, 4.733576172214837e-16),
        (1.3468783663897061e-107, -1.4151006846513938e-107),
        (-3.032884093423179e-17, 2.562615657011605e-17),
        (8.805923212937018e-109, 7.7423473663682705e-109),
        (-1.5499541850852738e-18, -1.621968879438758e-18),
        (-3.719271435970733e-110, 4.884075184820949e-110),
        (7.357528296991867e-20, -8.338997050291572e-20),
    ),
    (
        (2.936278500929641e-08, 3.265111475638611e-07),
        (-1.630606687682846e-96, 7.227311378885719e-97),
        (2.2178901730802707e-08, -3.738522579876694e-07),
        (-6.951892636906027e-98, 7.873974597140882e-98),
        (-7.295688187307834e-08, 6.011065677871262e-08),
        (-1.5683016866674134e-98, 5.256640954036544e-99),
        (2.645638922300747e-08, -1.654114777042731e-08),
        (1.177813189501469e-99, -1.1609565973283902e-99),
        (-5.894169656733621e-09, 4.8818577350439314e-09),
        (-2.0418823202136174e-100, 4.109797758501725e-100),
        (9.05105219534122e-10, -1.3812855623833726e-09),
        (-7.44200055229958e-102, -1.0561789616314206e-100),
        (-3.075521441788535e-11, 3.147364092264676e-10),
        (1.4702025725550644e-101, 1.4724745585616875e-101),
        (-2.8673037964092454e-11, -4.604299918554139e-11),
        (-3.4721559693464275e-102, 2.987039867561758e-103),
        (8.153702339979943e-12, 1.6800277937694668e-12),
        (2.247950203770654e-103, -4.466980344355527e-103),
        (-8.292066579084584e-13, 7.878929556218741e-13),
        (3.780991834451545e-104, 4.783784044058569e-104),
        (-4.0604882133584e-14, -1.3389567586718572e-13),
        (-6.140977942962831e-105, 2.040452520522838e-105),
        (1.5132819571901596e-14, 4.6856362543333895e-16),
        (-3.984125064504746e-107, -6.080382421443929e-106),
        (-3.194827627535269e-16, 1.3823307388025462e-15),
        (5.0265002745493664e-107, 4.669106368508065e-108),
        (-1.0766368571179305e-16, -3.601125650642473e-17),
        (-6.074399884484738e-109, 3.583368100521413e-108),
        (2.6518412677575147e-18, -7.30530155346425e-18),
        (-2.2337001756624193e-109, -4.114564896800792e-110),
        (4.358130852599677e-19, 1.4747428582217707e-19),
    ),
    (
        (-6.440234021739166e-97, 3.4444984118313914e-97),
        (-3.568337750305722e-07, -4.6185651330129846e-08),
        (-6.29817730390075e-97, 1.64980836740939e-97),
        (4.794099362733929e-08, 5.101499662012651e-08),
        (-3.1092414338862492e-99, 8.673409729760201e-99),
        (-3.661053531173953e-09, -2.691252872600252e-08),
        (-7.426700637899876e-100, -1.2603424729330006e-99),
        (5.768430777613036e-10, 7.424697081791756e-09),
        (1.20029334886394e-100, 4.033539498491588e-100),
        (-2.84486082231183e-10, -1.6742912900628394e-09),
        (-6.060529375816265e-101, -8.85556400525274e-101),
        (1.4950124007501245e-10, 3.140050697453262e-10),
        (2.0797210329447118e-101, 1.0346430352202054e-101),
        (-4.994138337696581e-11, -3.9489987705258193e-11),
        (-4.227401823245951e-102, 9.202876732351672e-103),
        (1.0466480345995487e-11, 5.616613148785469e-13),
        (3.4926065966973115e-103, -6.020107317073581e-103),
        (-1.1775334896309384e-12, 1.0152442792335125e-12),
        (4.16972076405816e-104, 8.775140840015499e-104),
        (-1.009347376187904e-14, -2.0801444759447887e-13),
        (-1.1674734326825073e-104, -3.9898790998077284e-106),
        (2.225090129627393e-14, 1.1513261044008803e-14),
        (4.947244565762188e-106, -1.1084869545093889e-105),
        (-2.064107798869233e-15, 1.7326340412504206e-15),
        (8.319324297278673e-107, 7.428291317072764e-107),
        (-1.06565978855965e-16, -2.326057084848411e-16),
        (-7.486047547276391e-108, 5.28313652816202e-108),
        (2.032793797946901e-17, -5.609128104998655e-18),
        (-3.026243173879155e-109, -5.960110128003531e-109),
        (2.844989045963598e-19, 1.4730148554454994e-18),
    ),
    (
        (-1.3678527328541043e-08, 7.306812781436176e-08),
        (-4.5477433499583986e-97, 3.308088556506405e-97),
        (2.907602673259376e-08, -7.30867144640987e-08),
        (-1.3236069972564788e-97, 2.886605066995684e-98),
        (-2.10151388466597e-08, -1.9647383043943327e-09),
        (-1.2061274713490839e-99, -1.0667828120897047e-100),
        (6.908573161443109e-09, 2.6273269818368084e-09),
        (3.549883274877913e-100, 1.2380907585909992e-100),
        (-1.5810890934789259e-09, -7.77266859639367e-10),
        (-1.0372705405605766e-100, -2.5105995719167558e-101),
        (3.529305756850921e-10, 1.452421975610484e-10),
        (2.5280861934845698e-101, -1.68089388781224e-102),
        (-7.393736087430956e-11, -9.372187914496484e-12),
        (-4.4005694584374115e-102, 2.7101667359810135e-102),
        (1.2452764030930402e-11, -3.937159816267533e-12),
        (3.3479827445001965e-103, -8.520719713231865e-103),
        (-1.3044221844455757e-12, 1.6038073500691636e-12),
        (5.771038091704541e-104, 1.2977141330343454e-103),
        (-1.2351367535388747e-14, -2.968856525279792e-13),
        (-1.8798839848914022e-104, -4.300490259818219e-105),
        (3.04168632816346e-14, 2.4071723522794872e-14),
        (1.5494313716400879e-105, -1.6808715641016308e-105),
        (-4.351350887247901e-15, 1.449284680684001e-15),
        (9.320671303558476e-107, 2.1574827227109903e-106),
        (6.493312632037e-17, -4.84376085866539e-16),
        (-2.1132332479038555e-107, 1.3732007338815333e-108),
        (4.158100309638009e-17, 2.097809620622808e-17),
        (3.576948217330018e-109, -1.667124086881442e-108),
        (-2.493183455365397e-18, 3.0171406516670338e-18),
        (1.1302272518826095e-109, 5.005987925612291e-110),
        (-1.9513046733490463e-19, -2.1061420891153407e-19),
    ),
    (
        (-2.1179159914234474e-97, 1.2503132769797113e-97),
        (-1.009281894378136e-07, -2.9266856963277797e-08),
        (-8.314729205837393e-98, 7.46066635047602e-98),
        (4.2404996931679115e-09, 1.3655580406411244e-08),
        (-1.741932691461641e-98, 4.252714569318261e-99),
        (4.519791120771792e-09, -5.5237158750853365e-09),
        (2.4302718187184757e-100, -2.5990972432696617e-100),
        (-1.4763909016136637e-09, 1.1704176029036743e-09),
        (-8.055690449990958e-101, 6.687810125150975e-101),
        (3.606107122206684e-10, -2.1274481541339905e-10),
        (1.9241902209147445e-101, -1.913969065728727e-101),
        (-7.18962572898134e-11, 4.894347846146677e-11),
        (-2.844237550246393e-102, 5.318043444723257e-102),
        (1.067439448060666e-11, -1.2187025735698906e-11),
        (3.1369678000683264e-104, -1.1619542769397753e-102),
        (-8.312173664604351e-13, 2.589513000742764e-12),
        (1.095151880057158e-103, 1.636250215022212e-103),
        (-9.919083483587135e-14, -4.0318177312793287e-13),
        (-2.8774464991421155e-104, -6.510300889732335e-105),
        (4.637752154375964e-14, 3.466854442125034e-14),
        (3.0650540477094934e-105, -2.4193665144623383e-105),
        (-7.259194679179907e-15, 1.288542353406104e-15),
        (4.968465614997181e-107, 4.529609467062832e-106),
        (3.74075055658485e-16, -7.699065902061066e-16),
        (-4.38488261303616e-107, -1.5622719543857403e-107),
        (5.174967609827473e-17, 7.388198597140064e-17),
        (2.710839534025865e-108, -3.1506746248047496e-108),
        (-8.374621429258587e-18, 1.8650335144970247e-18),
        (1.7318936018905994e-109, 2.794212528515068e-109),
        (4.6219257403621936e-20, -7.275949737367702e-19),
    ),
    (
        (-1.1947808486555793e-08, 2.3958454791763178e-08),
        (-3.1080904189614884e-97, 1.049803200304705e-97),
        (1.5007922550429418e-08, -2.1269766494911203e-08),
        (-7.709304293827404e-99, 9.431317169474059e-99),
        (-3.743007856140543e-09, -4.263185916291498e-09),
        (-1.440700805815032e-99, -3.021029343052001e-101),
        (7.235584664876938e-10, 1.956177549171973e-09),
        (2.5358063423873466e-101, 1.0026401888577474e-100),
        (-3.360641418998707e-11, -4.65382667492934e-10),
        (-3.1271039155392366e-102, -2.8401250523373228e-101),
        (-7.719827088416304e-12, 1.0071197187251715e-10),
        (1.4571137200479718e-102, 6.7649445048702984e-102),
        (9.512690314312368e-14, -2.003942061045255e-11),
        (-6.917181834334162e-103, -1.2661203221001132e-102),
        (8.348433068537178e-13, 3.4596343580098976e-12),
        (2.1405945093801856e-103, 1.5464146274165765e-103),
        (-3.353098563894737e-13, -4.657527885773201e-13),
        (-4.29208914641666e-104, -1.464683997212792e-105),
        (7.727908267612047e-14, 3.4721664663973596e-14),
        (4.785802115037459e-105, -3.9823345746698496e-105),
        (-1.1167191109028873e-14, 2.6446585589256903e-15),
        (-1.5839959262788046e-107, 8.044007275734753e-106),
        (7.558890382765946e-16, -1.2098236725040148e-15),
        (-7.552114045451238e-107, -5.324370370696602e-107),
        (5.441623528725318e-17, 1.5316493863773304e-16),
        (8.357985552605931e-108, -4.262446164772309e-108),
        (-1.6535244189177012e-17, -3.585121648255375e-18),
        (6.555827286835235e-110, 8.338181734730948e-109),
        (9.77798105680734e-19, -1.267719212126624e-18),
        (-6.368422983777562e-110, -1.596653271871124e-110),
        (7.454712061114478e-20, 1.1458887745403964e-19),
    ),
    (
        (-1.2326276558765404e-97, 6.251702797079262e-98),
        (-2.914738015894376e-08, -2.3088684919181143e-08),
        (-1.1784724929273258e-97, 2.7950787965856636e-98),
        (-6.755956056495587e-10, 3.4352874559300322e-09),
        (-6.947706805967451e-100, 6.646606770793798e-100),
        (2.205033441262223e-09, -2.211364807136983e-10),
        (5.308929947123523e-101, 1.4199120238082573e-101),
        (-5.320571255922204e-10, -1.208283969532066e-10),
        (-2.760083117715431e-101, -1.0971364042979344e-101),
        (9.81494406115711e-11, 6.363479479174385e-11),
        (6.897993918823525e-102, 3.673375489488277e-102),
        (-1.8846331600433265e-11, -1.5940251289464034e-11),
        (-1.6389722114086522e-102, -6.500255479603213e-103),
        (3.765286196304764e-12, 2.7221332794886254e-12),
        (3.448446263362495e-103, 3.4557523840346124e-104),
        (-7.270312434697638e-13, -3.055759328955958e-13),
        (-5.73363421781459e-104, 1.9508983272728483e-104),
        (1.2251352100861226e-13, 3.7259393972100144e-15),
        (5.9200935742680674e-105, -7.407243636262197e-105),
        (-1.563164343807404e-14, 7.927772485808707e-15),
        (3.570885072530611e-107, 1.3324845943699702e-105),
        (1.0582163036573163e-15, -2.0522174625937594e-15),
        (-1.2677729637047108e-106, -1.1071160657309949e-106),
        (7.464670541556858e-17, 2.7027788764063804e-16),
        (1.8551126787625698e-107, -4.2643479772578575e-108),
        (-2.836486649408022e-17, -1.3360326935442117e-17),
        (-5.522360870542286e-109, 1.8384449576749717e-108),
        (2.7741224873521206e-18, -1.6358792872247707e-18),
        (-1.297313053571649e-109, -1.1194388537577902e-109),
        (1.2950615701297689e-20, 3.0228131161598043e-19),
    ),
    (
        (-6.50576014635899e-09, 6.380774567036357e-09),
        (-8.529342847386851e-98, 6.076448459880483e-98),
        (6.552755124323064e-09, -5.1044131418586534e-09),
        (-2.490010326798081e-98, 5.42038835119475e-99),
        (1.5052379790284166e-10, -1.810637679837617e-09),
        (1.7366710248883588e-101, -9.17185892288062e-101),
        (-2.809314764157287e-10, 6.130811767661966e-10),
        (-2.0434921181343284e-101, 2.4747145520474503e-101),
        (1.0691859031811813e-10, -8.734089594668947e-11),
        (7.399222717078567e-102, -4.476635188598313e-102),
        (-2.8506991133375592e-11, 9.66971231630377e-12),
        (-1.896511216059729e-102, 9.65142526979157e-103),
        (5.8956353123887634e-12, -1.3878078995143217e-12),
        (3.7379252356954304e-103, -2.473985042845598e-103),
        (-1.0313452961064243e-12, 3.244804800911319e-13),
        (-5.5063921495086935e-104, 6.293325757988744e-104),
        (1.529496272824422e-13, -8.745275784326754e-14),
        (4.2303284162027406e-105, -1.3355547338645843e-104),
        (-1.7082977171188867e-14, 2.0209492858773428e-14),
        (5.058209817403155e-106, 2.055437038524295e-105),
        (8.165247517477374e-16, -3.578606488088338e-15),
        (-2.2958495839273014e-106, -1.7567163984455083e-106),
        (1.7212983035168928e-16, 4.3824748435393616e-16),
        (3.5323256193973776e-107, -5.145244586926764e-108),
        (-4.951808990845286e-17, -2.5915717533900713e-17),
        (-1.9513399455385975e-108, 3.4651411152535395e-108),
        (5.77521810638584e-18, -2.067966358749683e-18),
        (-1.9398345123050363e-109, -3.4764170734019382e-109),
        (-1.7943321821875302e-19, 5.948677978177637e-19),
    ),
    (
        (-5.7160457917883634e-98, 2.6883753414717236e-98),
        (-8.641840933682283e-09, -1.0757165109610374e-08),
        (-1.525066200503457e-98, 1.3819626482259252e-98),
        (-3.292362227996995e-10, 4.5271705553617157e-10),
        (-3.2311413113519438e-99, 5.974475126008329e-100),
        (6.377450129964438e-10, 4.759582434950679e-10),
        (2.473367174992714e-101, 2.6016958001048188e-101),
        (-9.077965329711152e-11, -1.5172236015260731e-10),
        (-1.7665040972379473e-102, -9.198986396615893e-102),
        (-1.5478851544734594e-12, 3.613761849109381e-11),
        (-2.657615735131727e-103, 2.512196586610245e-102),
        (2.639657631060522e-12, -7.38924438430003e-12),
        (8.760089201888381e-104, -5.673905599625928e-103),
        (-6.04874557013936e-13, 1.3541362221282516e-12),
        (-4.8451546502259556e-105, 1.137051740627956e-103),
        (8.753568435481824e-14, -2.3683005500366343e-13),
        (-4.327258085705062e-105, -1.980376417613698e-104),
        (-5.995061538903616e-15, 3.921412624030861e-14),
        (1.879186685809065e-105, 2.670850207547808e-105),
        (-1.0442365598956974e-15, -5.67315241346747e-15),
        (-4.3417926591058807e-106, -1.9815700230674007e-106),
        (4.636233907590407e-16, 6.237259555507608e-16),
        (6.181486874789618e-107, -1.417495044651086e-107),
        (-9.102138498112884e-17, -3.4005867639091476e-17),
        (-4.160373883656879e-108, 6.437595206175499e-108),
        (1.0678514133907912e-17, -3.6379948701663305e-18),
        (-2.5732100041366335e-109, -8.010539368040843e-109),
        (-5.272022020830503e-19, 1.0953740846627294e-18),
        (8.059238482147449e-110, 2.213287168423065e-110),
        (-5.277176598173946e-20, -1.0930399722844118e-19),
    ),
    (
        (-3.3628819624877105e-09, 2.029729789648026e-09),
        (-8.890890567505075e-98, 2.564870551091839e-98),
        (3.025748946642134e-09, -1.710561216896356e-09),
        (-1.5337328198725573e-99, 1.7369642009565344e-99),
        (5.262673958511173e-10, -4.258455428445671e-10),
        (-2.0073700558466925e-100, 2.254393424491324e-101),
        (-2.2657786082382302e-10, 1.0340312053839833e-10),
        (-1.0428632635481178e-101, 5.691061076454669e-103),
        (4.3595247490113166e-11, 8.79781386182746e-12),
        (2.5045443714573564e-102, 1.4737606998384356e-102),
        (-7.085600291314651e-12, -6.97550962133962e-12),
        (-5.311102248556068e-103, -4.987378128887307e-103),
        (1.0764177158273662e-12, 1.7275691847587673e-12),
        (1.0767402300084282e-103, 1.0941976914073037e-103),
        (-1.6796101106493673e-13, -3.207463514272914e-13),
        (-2.2329300267148402e-104, -1.835300040902911e-104),
        (3.0436831224936073e-14, 5.080729752703377e-14),
        (4.4698978557262255e-105, 2.0951165058508685e-105),
        (-6.0123830756822806e-15, -6.693646168819412e-15),
        (-7.655549828955552e-106, -4.0451082531974673e-107),
        (1.1010663599648833e-15, 6.295749288131082e-16),
        (9.730997169113494e-107, -4.8168294603171786e-107),
        (-1.6562573042616467e-16, -1.3417783002872104e-17),
        (-6.475039711129715e-108, 1.247746155142784e-107),
        (1.806505586234879e-17, -9.190042511646457e-18),
        (-4.417525631224894e-109, -1.604791700988341e-108),
        (-9.81989061184208e-19, 2.0833253476197755e-18),
        (1.6253640121954053e-109, 7.744630145227353e-110),
        (-7.755760594122433e-20, -2.310582026790773e-19),
    ),
    (
        (-3.541677312473846e-98, 1.7467302078117176e-98),
        (-2.300619828745881e-09, -5.849551035755402e-09),
        (-3.351273169171074e-98, 7.577225182516961e-99),
        (4.328513219114018e-11, 4.6945465795380464e-11),
        (-9.644176005406097e-101, 6.768656318131582e-101),
        (7.67720494029841e-11, 3.208658384281306e-10),
        (-9.023758570848974e-102, 1.5473608112383296e-101),
        (1.1670731194856133e-11, -6.246537268104924e-11),
        (2.2191467504682392e-102, -2.312472484032367e-102),
        (-1.0398531283161556e-11, 6.18842887385961e-12),
        (-8.535978781045608e-103, 3.044031239759774e-103),
        (2.7564676228165563e-12, -2.2913737758705313e-13),
        (2.0349050657506746e-103, -3.2956759618714674e-104),
        (-5.176044024645512e-13, -6.371789750553905e-14),
        (-4.052580502453373e-104, 4.842487401483721e-105),
        (8.649255041179285e-14, 1.795983248392677e-14),
        (7.17324120390687e-105, -1.609350463215907e-105),
        (-1.3798750816853691e-14, -2.1404112418519e-15),
        (-1.079769828230605e-105, 5.402229062776013e-106),
        (2.053272812568183e-15, -6.143684033715301e-17),
        (1.2115753169495643e-106, -1.3462830128811062e-106),
        (-2.6527612014294717e-16, 9.279619021288027e-17),
        (-5.829527567804925e-108, 2.4211252951508655e-107),
        (2.6034249672175107e-17, -2.4636832761955418e-17),
        (-1.1566102264628158e-108, -2.9249572730441848e-108),
        (-1.1897431467787762e-18, 4.0999130950524904e-18),
        (3.255920291603486e-109, 1.6528601180778731e-109),
        (-1.6430581492826172e-19, -4.457845734236129e-19),
    ),
    (
        (-1.7113458730308389e-09, 4.033336478722386e-10),
        (-2.420516582887501e-98, 1.7048521052664754e-98),
        (1.493490360404199e-09, -4.1916101775180935e-10),
        (-7.081091502055362e-99, 1.4763281484829794e-99),
        (3.1098608208214553e-10, 2.920905371836553e-11),
        (1.7147667256841354e-101, 3.563466154410073e-102),
        (-1.0173434318904308e-10, -2.329640112142516e-11),
        (-2.971543664858875e-102, -2.4300733615692306e-102),
        (7.993196497357352e-12, 1.284932075682692e-11),
        (2.3450286078509184e-105, 1.0705850335913716e-102),
        (9.62602025150068e-13, -3.4729156959098536e-12),
        (9.091529522192094e-104, -2.598995882688757e-103),
        (-4.3391830889148266e-13, 6.171134288706008e-13),
        (-2.811924659903562e-104, 5.003509244478043e-104),
        (9.671199745053257e-14, -9.022519312067612e-14),
        (5.724778554548454e-105, -9.190347736987582e-105),
        (-1.7055628980087778e-14, 1.3263208662716966e-14),
        (-8.256378220270959e-106, 1.6817191098781774e-105),
        (2.5121205576086886e-15, -2.1534736692939943e-15),
        (6.431253839518553e-107, -2.893887358247797e-106),
        (-2.9860227632680887e-16, 3.651695575604174e-16),
        (6.205607352477233e-108, 4.258807888354891e-107),
        (2.3896643137284565e-17, -5.796990073152249e-17),
        (-3.3723704033714934e-108, -4.66183793438503e-108),
        (1.1091766252381e-19, 7.79265768908313e-18),
        (6.667346455412959e-109, 2.4344202738165304e-109),
        (-4.54989347227908e-19, -7.847994311751972e-19),
    ),
    (
        (-2.229157183541697e-98, 8.843622624404152e-99),
        (-3.7853688466829685e-10, -2.8657554126805022e-09),
        (-4.300164825264646e-99, 3.909072771533753e-99),
        (1.4907004679628415e-10, 2.3805534200017352e-11),
        (-8.805546984132781e-100, 1.6041471474913852e-100),
        (-6.423414178653612e-11, 1.4219336987382654e-10),
        (-3.058850308351706e-102, 4.773489873942103e-102),
        (1.8283474606515562e-11, -1.716464334156368e-11),
        (1.150281595378892e-102, 1.4167275028102915e-103),
        (-3.881484426563911e-12, -1.8025175828918296e-12),
        (-2.672227857744213e-103, -2.3954908510399046e-103),
        (5.740888686653815e-13, 9.112265205497242e-13),
        (4.2323280664861723e-104, 6.895578475371973e-104),
        (-5.0396628411654694e-14, -1.937669312924423e-13),
        (-5.674278901045538e-105, -1.478835518890949e-104),
        (1.0661358331023215e-15, 3.3417508373193647e-14),
        (9.10275641465883e-106, 2.7245364460228707e-105),
        (3.1467541578085323e-16, -5.29692464005573e-15),
        (-1.967510472050924e-106, -4.3593019446277366e-106),
        (-9.792554158182411e-18, 7.873697264436395e-16),
        (4.4572284442454474e-107, 5.786179250210001e-107),
        (-1.7067653376492036e-17, -1.075189916729822e-16),
        (-8.702846950224495e-108, -5.472272105123051e-108),
        (5.999842861868079e-18, 1.2733667332687824e-17),
        (1.3324195236153223e-108, 1.2537140498570617e-109),
        (-1.2601832339536826e-18, -1.1512320320746889e-18),
        (-1.429308730789352e-109, 7.501764799762815e-110),
        (1.8842599827330016e-19, 4.753002303954854e-20),
    ),
    (
        (-8.863313524940596e-10, 1.5533904976347393e-11),
        (-3.5812035199704384e-98, 9.383415826455059e-99),
        (8.057734737663769e-10, -1.093264362845514e-10),
        (-4.345858546781548e-100, 4.685641904803966e-100),
        (1.1385419607108369e-10, 1.2510789422066737e-10),
        (-5.90860436539512e-101, 1.8997795547025194e-101),
        (-3.350871581773948e-11, -3.602609902889668e-11),
        (-2.1362945941956536e-103, -1.3602554030330561e-102),
        (-9.106602422424442e-13, 5.099099897372211e-12),
        (-3.6622168850226105e-103, 2.264319098682927e-103),
        (1.386043113719203e-12, -3.629087644819179e-13),
        (1.1313451538710644e-103, -1.6293763662782675e-104),
        (-3.0377146923170115e-13, -4.4531185960619056e-14),
        (-2.292597820152302e-104, -3.562011565602883e-105),
        (4.64413369067578e-14, 2.375762581477691e-14),
        (4.106148706377761e-105, 1.4709078164725395e-105),
        (-6.453672332634396e-15, -5.4978584987203296e-15),
        (-7.077141039502565e-106, -2.838099003148061e-106),
        (9.19184030878174e-16, 9.310207977806802e-16),
        (1.1753373998213657e-106, 3.364810266963613e-107),
        (-1.3816657907669233e-16, -1.2752213634719137e-16),
        (-1.8025976700550028e-107, -9.363953072649632e-109),
        (2.1074513155390975e-17, 1.388116502453651e-17),
        (2.36344440313638e-108, -7.087086050817429e-109),
        (-3.0260287551114386e-18, -9.710133771601666e-19),
        (-2.3010955097361987e-109, 2.1247177507829338e-109),
        (3.755110509522599e-19, -2.4713257589797356e-20),
    ),
    (
        (-1.4317502453596747e-98, 6.939552849921261e-99),
        (1.727020386006469e-10, -1.5587128821003527e-09),
        (-1.347743941711903e-98, 2.958785210927693e-99),
        (1.243507963967748e-10, 8.107154098020296e-11),
        (-1.3063241581602835e-101, 2.3181426238013944e-101),
        (-7.124455452767954e-11, 4.150754247367471e-11),
        (-5.142429471183455e-102, 1.698932242766001e-102),
        (1.0698492861596513e-11, -2.543759452769954e-12),
        (2.0918547696766763e-103, 3.74458171351449e-103),
        (-2.114908270201032e-13, -1.5496204694945489e-12),
        (3.035483825035789e-104, -1.5405937749613518e-103),
        (-2.1662804908881364e-13, 4.10845571027e-13),
        (-1.83334292744551e-104, 2.918255242661725e-104),
        (6.343503551947498e-14, -5.399153121616951e-14),
        (5.0948820101452866e-105, -4.177001080680774e-105),
        (-1.2757232079936385e-14, 4.553352629269644e-15),
        (-1.053020634559486e-105, 5.798027499702506e-106),
        (2.147587799390794e-15, -2.4744996440971916e-16),
        (1.7997432025993606e-106, -9.250760675809843e-107),
        (-3.2316088572001405e-16, 1.1752852523532198e-17),
        (-2.620723576776997e-107, 1.7071558263345698e-107),
        (4.4861075116324203e-17, -3.6513276439735e-18),
        (3.1211986637824853e-108, -3.2044379775558544e-108),
        (-5.708757842744961e-18, 1.3790285910197362e-18),
        (-2.525132087698232e-109, 5.385808370451432e-109),
        (6.334195321888592e-19, -3.449371577551807e-19),
    ),
)
