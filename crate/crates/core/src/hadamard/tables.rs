// Generated by tools/gen_hadamard_tables.py. Do not edit.
//
// Row-major sign bits, one bit per entry (set = -1), MSB first.

pub(crate) static BASE_TABLES: &[(usize, &str)] = &[
    (
        12,
        concat!(
            "00091dc8ea47d23e91f48ba49d28e9c74a3a",
        ),
    ),
    (
        20,
        concat!(
            "0000098579cc2bca615e930afc9857e4c2bf2615f930abc985de4c2af261d7930abc9895e4c8af26",
            "85793c2bc9e15e4b0af2",
        ),
    ),
    (
        28,
        concat!(
            "4000000d555555130ff0c765aa5904c3fc35d96a963130ff06765aa50c4c3fc59d96a903130ff567",
            "65aa30c4c3f659d96a3c3130f696765a3f0c4c36a59d963fc31306a967650ff0c4c5aa59d903fc31",
            "356a967630ff0c465aa59d0c3fc31596a967",
        ),
    ),
    (
        36,
        concat!(
            "400000000d5555555510cfc3f30759a96a650433f0fcc5d66a5a99010cfc3f35759a96a630433f0f",
            "c65d66a5a90c10cfc3f59759a96a330433f0f665d66a5a3cc10cfc3699759a963f30433f06a65d66",
            "a50fcc10cfc5a99759a903f30433f56a65d66a30fcc10cf65a99759a3c3f30433696a65d663f0fcc",
            "10c6a5a997590fc3f30435a96a65d633f0fcc1066a5a99750cfc3f30459a96a65d033f0fcc1566a5",
            "a997",
        ),
    ),
    (
        40,
        concat!(
            "00000000009857998579cc2bccc2bca615ea615e930af930afc9857c9857e4c2be4c2bf2615f2615",
            "f930af930abc985bc985de4c2de4c2af261af261d7930d7930abc98abc9895e4c95e4c8af268af26",
            "8579385793c2bc9c2bc9e15e4e15e4b0af2b0af200000fffff9857967a86cc2bc33d43a615e59ea1",
            "930af6cf50c9857367a8e4c2b1b3d4f26150d9eaf930a06cf5bc9854367ade4c221b3daf26150d9e",
            "d7930286cfabc985436795e4c6a1b38af26750d9857937a86cc2bc93d436e15e41ea1bb0af24f50d",
        ),
    ),
    (
        44,
        concat!(
            "000000000009ac41d1f729cd620e8fb94a6b10747dca935883a3ee5c9ac41d1f72a4d620e8fb9d26",
            "b10747dca935883a3ee949ac41d1f7ca4d620e8fbe526b10747df2935883a3eb949ac41d1fdca4d6",
            "20e8fee526b10747f72935883a3fb949ac41d1fdca4d620e8bee526b10749f72935883a8fb949ac4",
            "1dc7dca4d620ea3ee526b107d1f72935883e8fb949ac41f47dca4d620ba3ee526b109d1f72935888",
            "e8fb949ac48747dca4d6283a3ee526b1c1d1f729358a0e8fb949ac90747dca4d6883a3ee526bc41d",
            "1f72935e20e8fb949ab10747dca4dd883a3ee526ac41d1f7293d620e8fb949eb10747dca4b5883a3",
            "ee52",
        ),
    ),
    (
        52,
        concat!(
            "4000000000000d555555555555100cf3c3f0f3c7559a696a5a6904033ff0fc0cf5d566aa5a959a01",
            "0cccfc3f333575999a96a666004f303f0ffcc55da656a5aa990013cf0fc3cf355769a5a969a633c4",
            "033cf0fc3669d5669a5a960cf100cffc3f059a7559aa96a5333043333f0fc6665d6666a5a93cc013",
            "cc0fc3f699576995a96a0f3004f3c3f0f5a655da696a5a3c3cf100cf3c36969a7559a6963f033c40",
            "33ff06a5669d566aa50fcccc10cccfc5a999975999a903ff3004f303f56aa655da656a30f3cc013c",
            "f0f65a6995769a5a3c3f0f3c4033c696a5a69d56693f0fc0cf100cf6a5a959a7559a0fc3f3330433",
            "35a96a6665d66603f0ffcc013cc56a5aa995769930fc3cf3004f365a969a655da633cf0fc3cf1006",
            "69a5a969a7550cffc3f033c4059aa96a5669d53333f0fcccc106666a5a9999753cc0fc3ff3004699",
            "5a96aa655d0f3c3f0f3cc015a696a5a69957",
        ),
    ),
    (
        60,
        concat!(
            "000000000000000915b10c1f3dc95dc8ad8860f9ee4aea456c4307cf7257d22b62183e7b92be915b",
            "10c1f3dc95f48ad8860f9ee4aba456c4307cf725dd22b62183e7b92ae915b10c1f3dc9d748ad8860",
            "f9ee4aba456c4307cf7295d22b62183e7b9cae915b10c1f3dca5748ad8860f9ee92ba456c4307cf7",
            "c95d22b62183e7be4ae915b10c1f3df25748ad8860f9eb92ba456c4307cfdc95d22b62183e7ee4ae",
            "915b10c1f3f725748ad8860f9fb92ba456c4307cbdc95d22b62183e9ee4ae915b10c1fcf725748ad",
            "8860fe7b92ba456c4307f3dc95d22b62183f9ee4ae915b10c1fcf725748ad8860be7b92ba456c430",
            "9f3dc95d22b62188f9ee4ae915b10c87cf725748ad88683e7b92ba456c43c1f3dc95d22b621e0f9e",
            "e4ae915b10b07cf725748ad88983e7b92ba456c48c1f3dc95d22b62860f9ee4ae915b1c307cf7257",
            "48ad8a183e7b92ba456c90c1f3dc95d22b68860f9ee4ae915bc4307cf725748ade2183e7b92ba456",
            "b10c1f3dc95d22bd8860f9ee4ae915ec4307cf725748ab62183e7b92ba45db10c1f3dc95d22ad886",
            "0f9ee4ae91d6c4307cf725748ab62183e7b92ba495b10c1f3dc95d28ad8860f9ee4ae9c56c4307cf",
            "72574a2b62183e7b92ba",
        ),
    ),
    (
        76,
        concat!(
            "4000000000000000000d555555555555555555130f300fcff3f00cf0c765a655a9aa6a559a5904c3",
            "cc03f3fcfc033c35d969956a6a9a9566963130f300fcff3f00cf06765a655a9aa6a559a50c4c3cc0",
            "3f3fcfc033c59d969956a6a9a9566903130f300fcff3f00cf56765a655a9aa6a559a30c4c3cc03f3",
            "fcfc033659d969956a6a9a95663c3130f300fcff3f00c696765a655a9aa6a5590f0c4c3cc03f3fcf",
            "c035a59d969956a6a9a95633c3130f300fcff3f006696765a655a9aa6a550cf0c4c3cc03f3fcfc05",
            "9a59d969956a6a9a95033c3130f300fcff3f056696765a655a9aa6a500cf0c4c3cc03f3fcfc559a5",
            "9d969956a6a9a90033c3130f300fcff3f556696765a655a9aa6a300cf0c4c3cc03f3fcf6559a59d9",
            "69956a6a9a3c033c3130f300fcff36956696765a655a9aa63f00cf0c4c3cc03f3fc6a559a59d9699",
            "56a6a90fc033c3130f300fcff5a956696765a655a9aa33f00cf0c4c3cc03f3f66a559a59d969956a",
            "6a3cfc033c3130f300fcf69a956696765a655a9a3f3f00cf0c4c3cc03f36a6a559a59d969956a63f",
            "cfc033c3130f300fc6a9a956696765a655a90ff3f00cf0c4c3cc03f5aa6a559a59d969956a33fcfc",
            "033c3130f300f66a9a956696765a655a3cff3f00cf0c4c3cc0369aa6a559a59d9699563f3fcfc033",
            "c3130f3006a6a9a956696765a6550fcff3f00cf0c4c3cc05a9aa6a559a59d9699503f3fcfc033c31",
            "30f3056a6a9a956696765a6500fcff3f00cf0c4c3cc55a9aa6a559a59d9699003f3fcfc033c3130f",
            "3556a6a9a956696765a6300fcff3f00cf0c4c3c655a9aa6a559a59d9690c03f3fcfc033c3130f595",
            "6a6a9a956696765a3300fcff3f00cf0c4c36655a9aa6a559a59d963cc03f3fcfc033c313069956a6",
            "a9a9566967650f300fcff3f00cf0c4c5a655a9aa6a559a59d903cc03f3fcfc033c313569956a6a9a",
            "9566967630f300fcff3f00cf0c465a655a9aa6a559a59d0c3cc03f3fcfc033c315969956a6a9a956",
            "6967",
        ),
    ),
    (
        108,
        concat!(
            "00000000000000000000000000093c0b754c10b199cbdf3544bf0dc9e05baa60858cce5ef9aa25f8",
            "6a4f02dd53042c6672f7cd512fc3d27816ea9821633397be6a897e1e93c0b754c10b199cbdf3544b",
            "f0b49e05baa60858cce5ef9aa25f89a4f02dd53042c6672f7cd512fc8d27816ea9821633397be6a8",
            "97e8693c0b754c10b199cbdf3544bfc349e05baa60858cce5ef9aa25fe1a4f02dd53042c6672f7cd",
            "512ff0d27816ea9821633397be6a897f8693c0b754c10b199cbdf3544bfc349e05baa60858cce5ef",
            "9aa25fe1a4f02dd53042c6672f7cd512bf0d27816ea9821633397be6a89df8693c0b754c10b199cb",
            "df3544afc349e05baa60858cce5ef9aa297e1a4f02dd53042c6672f7cd51cbf0d27816ea98216333",
            "97be6a8a5f8693c0b754c10b199cbdf35492fc349e05baa60858cce5ef9aa897e1a4f02dd53042c6",
            "672f7cd5c4bf0d27816ea9821633397be6aa25f8693c0b754c10b199cbdf35d12fc349e05baa6085",
            "8cce5ef9aa897e1a4f02dd53042c6672f7cdd44bf0d27816ea9821633397be6aa25f8693c0b754c1",
            "0b199cbdf3d512fc349e05baa60858cce5ef9ea897e1a4f02dd53042c6672f7cb544bf0d27816ea9",
            "821633397be9aa25f8693c0b754c10b199cbdfcd512fc349e05baa60858cce5efe6a897e1a4f02dd",
            "53042c6672f7f3544bf0d27816ea9821633397bf9aa25f8693c0b754c10b199cbdfcd512fc349e05",
            "baa60858cce5ebe6a897e1a4f02dd53042c6672fdf3544bf0d27816ea9821633397ef9aa25f8693c",
            "0b754c10b199cbf7cd512fc349e05baa60858cce5fbe6a897e1a4f02dd53042c6672bdf3544bf0d2",
            "7816ea982163339def9aa25f8693c0b754c10b199caf7cd512fc349e05baa60858cce97be6a897e1",
            "a4f02dd53042c667cbdf3544bf0d27816ea98216333e5ef9aa25f8693c0b754c10b199f2f7cd512f",
            "c349e05baa60858ccb97be6a897e1a4f02dd53042c669cbdf3544bf0d27816ea9821633ce5ef9aa2",
            "5f8693c0b754c10b19e72f7cd512fc349e05baa60858cb397be6a897e1a4f02dd53042c699cbdf35",
            "44bf0d27816ea982163cce5ef9aa25f8693c0b754c10b1e672f7cd512fc349e05baa60858b3397be",
            "6a897e1a4f02dd53042c999cbdf3544bf0d27816ea982168cce5ef9aa25f8693c0b754c10bc6672f",
            "7cd512fc349e05baa6085e33397be6a897e1a4f02dd53042b199cbdf3544bf0d27816ea9821d8cce",
            "5ef9aa25f8693c0b754c10ac6672f7cd512fc349e05baa6089633397be6a897e1a4f02dd53048b19",
            "9cbdf3544bf0d27816ea982858cce5ef9aa25f8693c0b754c1c2c6672f7cd512fc349e05baa60a16",
            "33397be6a897e1a4f02dd53090b199cbdf3544bf0d27816ea988858cce5ef9aa25f8693c0b754c84",
            "2c6672f7cd512fc349e05baa6821633397be6a897e1a4f02dd53c10b199cbdf3544bf0d27816ea9e",
            "0858cce5ef9aa25f8693c0b754b042c6672f7cd512fc349e05baa9821633397be6a897e1a4f02dd5",
            "cc10b199cbdf3544bf0d27816eaa60858cce5ef9aa25f8693c0b75d3042c6672f7cd512fc349e05b",
            "aa9821633397be6a897e1a4f02ddd4c10b199cbdf3544bf0d27816eaa60858cce5ef9aa25f8693c0",
            "b7d53042c6672f7cd512fc349e05bea9821633397be6a897e1a4f02df54c10b199cbdf3544bf0d27",
            "816baa60858cce5ef9aa25f8693c0bdd53042c6672f7cd512fc349e05eea9821633397be6a897e1a",
            "4f02b754c10b199cbdf3544bf0d2781dbaa60858cce5ef9aa25f8693c0add53042c6672f7cd512fc",
            "349e096ea9821633397be6a897e1a4f08b754c10b199cbdf3544bf0d27885baa60858cce5ef9aa25",
            "f8693c82dd53042c6672f7cd512fc349e816ea9821633397be6a897e1a4fc0b754c10b199cbdf354",
            "4bf0d27e05baa60858cce5ef9aa25f8693f02dd53042c6672f7cd512fc349f816ea9821633397be6",
            "a897e1a4bc0b754c10b199cbdf3544bf0d29e05baa60858cce5ef9aa25f869cf02dd53042c6672f7",
            "cd512fc34a7816ea9821633397be6a897e1a",
        ),
    ),
    (
        140,
        concat!(
            "000000000000000000000000000000000009855bb9860c8525f057c16d7b3e79889579cc2addcc30",
            "64292f82be0b6bd9f3cc44abca6156ee618321497c15f05b5ecf9e62255e930ab7730c190a4be0af",
            "82daf67cf3112afc9855bb9860c8525f057c16d7b3e7988957e4c2addcc3064292f82be0b6bd9f3c",
            "c44abf26156ee618321497c15f05b5ecf9e62255f930ab7730c190a4be0af82daf67cf3112abc985",
            "5bb9860c8525f057c16d7b3e798895de4c2addcc3064292f82be0b6bd9f3cc44aaf26156ee618321",
            "497c15f05b5ecf9e6225d7930ab7730c190a4be0af82daf67cf3112abc9855bb9860c8525f057c16",
            "d7b3e79889d5e4c2addcc3064292f82be0b6bd9f3cc44aaf26156ee618321497c15f05b5ecf9e622",
            "957930ab7730c190a4be0af82daf67cf311cabc9855bb9860c8525f057c16d7b3e7988a55e4c2add",
            "cc3064292f82be0b6bd9f3cc492af26156ee618321497c15f05b5ecf9e628957930ab7730c190a4b",
            "e0af82daf67cf31c4abc9855bb9860c8525f057c16d7b3e798a255e4c2addcc3064292f82be0b6bd",
            "9f3cc912af26156ee618321497c15f05b5ecf9e688957930ab7730c190a4be0af82daf67cf3c44ab",
            "c9855bb9860c8525f057c16d7b3e79e2255e4c2addcc3064292f82be0b6bd9f3cb112af26156ee61",
            "8321497c15f05b5ecf9e988957930ab7730c190a4be0af82daf67cfcc44abc9855bb9860c8525f05",
            "7c16d7b3e7e62255e4c2addcc3064292f82be0b6bd9f3f3112af26156ee618321497c15f05b5ecf9",
            "f988957930ab7730c190a4be0af82daf67cbcc44abc9855bb9860c8525f057c16d7b3e9e62255e4c",
            "2addcc3064292f82be0b6bd9fcf3112af26156ee618321497c15f05b5ecfe7988957930ab7730c19",
            "0a4be0af82daf67f3cc44abc9855bb9860c8525f057c16d7b3f9e62255e4c2addcc3064292f82be0",
            "b6bd9fcf3112af26156ee618321497c15f05b5ecbe7988957930ab7730c190a4be0af82daf69f3cc",
            "44abc9855bb9860c8525f057c16d7bcf9e62255e4c2addcc3064292f82be0b6bde7cf3112af26156",
            "ee618321497c15f05b5eb3e7988957930ab7730c190a4be0af82dafd9f3cc44abc9855bb9860c852",
            "5f057c16d7ecf9e62255e4c2addcc3064292f82be0b6bf67cf3112af26156ee618321497c15f05b5",
            "fb3e7988957930ab7730c190a4be0af82dabd9f3cc44abc9855bb9860c8525f057c16ddecf9e6225",
            "5e4c2addcc3064292f82be0b6af67cf3112af26156ee618321497c15f05bd7b3e7988957930ab773",
            "0c190a4be0af82debd9f3cc44abc9855bb9860c8525f057c16b5ecf9e62255e4c2addcc3064292f8",
            "2be0bdaf67cf3112af26156ee618321497c15f05ed7b3e7988957930ab7730c190a4be0af82b6bd9",
            "f3cc44abc9855bb9860c8525f057c1db5ecf9e62255e4c2addcc3064292f82be0adaf67cf3112af2",
            "6156ee618321497c15f096d7b3e7988957930ab7730c190a4be0af88b6bd9f3cc44abc9855bb9860",
            "c8525f057c85b5ecf9e62255e4c2addcc3064292f82be82daf67cf3112af26156ee618321497c15f",
            "c16d7b3e7988957930ab7730c190a4be0afe0b6bd9f3cc44abc9855bb9860c8525f057f05b5ecf9e",
            "62255e4c2addcc3064292f82bf82daf67cf3112af26156ee618321497c15fc16d7b3e7988957930a",
            "b7730c190a4be0abe0b6bd9f3cc44abc9855bb9860c8525f05df05b5ecf9e62255e4c2addcc30642",
            "92f82af82daf67cf3112af26156ee618321497c1d7c16d7b3e7988957930ab7730c190a4be0abe0b",
            "6bd9f3cc44abc9855bb9860c8525f095f05b5ecf9e62255e4c2addcc3064292f88af82daf67cf311",
            "2af26156ee618321497c857c16d7b3e7988957930ab7730c190a4be82be0b6bd9f3cc44abc9855bb",
            "9860c8525fc15f05b5ecf9e62255e4c2addcc3064292fe0af82daf67cf3112af26156ee618321497",
            "f057c16d7b3e7988957930ab7730c190a4bf82be0b6bd9f3cc44abc9855bb9860c8525fc15f05b5e",
            "cf9e62255e4c2addcc3064292be0af82daf67cf3112af26156ee61832149df057c16d7b3e7988957",
            "930ab7730c190a4af82be0b6bd9f3cc44abc9855bb9860c85297c15f05b5ecf9e62255e4c2addcc3",
            "06429cbe0af82daf67cf3112af26156ee6183214a5f057c16d7b3e7988957930ab7730c190a92f82",
            "be0b6bd9f3cc44abc9855bb9860c85c97c15f05b5ecf9e62255e4c2addcc30642a4be0af82daf67c",
            "f3112af26156ee618321d25f057c16d7b3e7988957930ab7730c190a92f82be0b6bd9f3cc44abc98",
            "55bb9860c89497c15f05b5ecf9e62255e4c2addcc30648a4be0af82daf67cf3112af26156ee61832",
            "8525f057c16d7b3e7988957930ab7730c19c292f82be0b6bd9f3cc44abc9855bb9860ca1497c15f0",
            "5b5ecf9e62255e4c2addcc30690a4be0af82daf67cf3112af26156ee6183c8525f057c16d7b3e798",
            "8957930ab7730c1e4292f82be0b6bd9f3cc44abc9855bb9860b21497c15f05b5ecf9e62255e4c2ad",
            "dcc30990a4be0af82daf67cf3112af26156ee6188c8525f057c16d7b3e7988957930ab7730c86429",
            "2f82be0b6bd9f3cc44abc9855bb9868321497c15f05b5ecf9e62255e4c2addcc3c190a4be0af82da",
            "f67cf3112af26156ee61e0c8525f057c16d7b3e7988957930ab7730b064292f82be0b6bd9f3cc44a",
            "bc9855bb9898321497c15f05b5ecf9e62255e4c2addcc8c190a4be0af82daf67cf3112af26156ee6",
            "860c8525f057c16d7b3e7988957930ab773c3064292f82be0b6bd9f3cc44abc9855bb9e18321497c",
            "15f05b5ecf9e62255e4c2addcb0c190a4be0af82daf67cf3112af26156ee9860c8525f057c16d7b3",
            "e7988957930ab77cc3064292f82be0b6bd9f3cc44abc9855bbe618321497c15f05b5ecf9e62255e4",
            "c2addf30c190a4be0af82daf67cf3112af26156eb9860c8525f057c16d7b3e7988957930ab7dcc30",
            "64292f82be0b6bd9f3cc44abc9855bee618321497c15f05b5ecf9e62255e4c2adf730c190a4be0af",
            "82daf67cf3112af26156bb9860c8525f057c16d7b3e7988957930abddcc3064292f82be0b6bd9f3c",
            "c44abc9855eee618321497c15f05b5ecf9e62255e4c2ab7730c190a4be0af82daf67cf3112af2615",
            "dbb9860c8525f057c16d7b3e7988957930aaddcc3064292f82be0b6bd9f3cc44abc985d6ee618321",
            "497c15f05b5ecf9e62255e4c2ab7730c190a4be0af82daf67cf3112af261d5bb9860c8525f057c16",
            "d7b3e7988957930aaddcc3064292f82be0b6bd9f3cc44abc98956ee618321497c15f05b5ecf9e622",
            "55e4c8ab7730c190a4be0af82daf67cf3112af26855bb9860c8525f057c16d7b3e798895793c2add",
            "cc3064292f82be0b6bd9f3cc44abc9e156ee618321497c15f05b5ecf9e62255e4b0ab7730c190a4b",
            "e0af82daf67cf3112af2",
        ),
    ),
    (
        156,
        concat!(
            "7442921d909660602eb72cd4d07debc6055d9c33a21490ec92cc0c05d6a59a9a0fbdf8c0abb3861d",
            "10a48764598180bad4b35341f7bf18157670d0e885243b2b3030175a966a683ef76302aece1b8744",
            "2921d9660602eb52cd4d07dee46055d9c3743a21490eccc0c05d6a59a9a0fbdc8c0abb386f21d10a",
            "487798180bad4b35341f7b918157670de90e885243b3030175a966a683ef72b02aece1bcc8744292",
            "1c60602eb52cd4d07dee5e055d9c378643a21490ec0c05d6a59a9a0fbdcb40abb386f1b21d10a487",
            "8180bad4b35341f7b960157670de3d90e885243030175a966a683ef72c82aece1bc6ec8744292006",
            "02eb52cd4d07dee59855d9c378c7643a214900c05d6a59a9a0fbdcb30abb386f183b21d10a48180b",
            "ad4b31341f7b966957670de301d90e8852430175a9662683ef72cd2aece1bc600ec8744292602eb5",
            "2cc0d07dee59ad5d9c378c087643a2148c05d6a5981a0fbdcb352bb386f18143b21d10a580bad4b3",
            "0341f7b966a57670de30221d90e88530175a9660683ef72cd4aece1bc60590ec87442802eb52cc0d",
            "07dee59a9dd9c378c0a487643a21405d6a5981a0fbdcb3533b386f1815243b21d10a0bad4b30301f",
            "7b966a6f670de302a921d90e884175a9660603ef72cd4d6ce1bc6055490ec874422eb52cc0c07dee",
            "59a9a59c378c0aba487643a205d6a598180fbdcb35343386f181575243b21d10bad4b30301f7b966",
            "a68670de302ae2921d90e8975a9660603ef72cd4d04e1bc6055d1490ec8744eb52cc0c07dee59a9a",
            "09c378c0abb0a487643a3d6a598180bbdcb35341b86f18157685243b21d1ad4b3030177b966a683f",
            "0de302aec42921d90e95a9660602ef72cd4d07e1bc6055d921490ec874b52cc0c05dee59a9a0fc37",
            "8c0abb310a487643b6a598180bbdcb35341f06f1815767885243b21cd4b3030177b966a683e8de30",
            "2aece442921d90fa9660602eb72cd4d07d9bc6055d9ca21490ec8752cc0c05d6e59a9a0fbb78c0ab",
            "b38d10a487642a598180badcb35341f7ef18157670e885243b214b3030175b966a683ef5e302aece",
            "1b4cfcfe8a4e885243b221cdd5031ec20fa6a658699f9fd14a7442921d9039baa063d841f4d4cb1d",
            "33f3fa2943a21490ec8737540c7b083e9a9962a67e7f452a1d10a48764e6ea818f6107d3532c44cf",
            "cfe8a570e885243b1cdd5031ec20fa6a658899f9fd14ac87442921db9baa063d841f4d4cb1033f3f",
            "a295a43a21490ef37540c7b083e9a9962167e7f452b521d10a48766ea818f6187d3532c42cfcfe8a",
            "56990e8852438dd5031ec38fa6a658849f9fd14ad2c87442921dbaa063d871f4d4cb1083f3fa295a",
            "7643a21490f7540c7b0e3e9a9962107e7f452b4db21d10a486ea818f61cfd3532c420fcfe8a5699d",
            "90e885241d5031ec39fa6a658841f9fd14ad32ec87442923aa063d87374d4cb1083f3fa295a66764",
            "3a21493540c7b0e6e9a9962107e7f452b4ce3b21d10a4aa818f61cdd3532c420fcfe8a5699e1d90e",
            "885255031ec39ba6a658841f9fd14ad33f0ec8744292a063d87374d4cb1083e3fa295a67e87643a2",
            "14940c7b0e6e9a9962107d7f452b4cfc43b21d10a6818f61cdd3532c420fafe8a5699f921d90e885",
            "1031ec39baea658841f4fd14ad33f290ec87442a063d8737554cb1083e9fa295a67e6487643a2140",
            "c7b0e6eaa9962107d3f452b4cfcf243b21d10818f61cdd5532c420fa6e8a5699f9e921d90e88431e",
            "c39baa2658841f4dd14ad33f3f490ec8744063d8737544cb1083e9aa295a67e7ea487643a20c7b0e",
            "6ea81962107d35452b4cfcfe5243b21d118f61cdd5032c420fa6a8a5699f9fc2921d90e8b1ec39ba",
            "a0658841f4d414ad33f3fa1490ec87463d8737540cb1083e9a9295a67e7f50a487643a07b0e6ea81",
            "962107d35352b4cfcfe885243b21d0f61cdd5032c420fa6a6a5699f9fd042921d90e9ec39baa0658",
            "841f4d4c4ad33f3fa221490ec877d8737540c31083e9a9995a67e7f4510a487643bb0e6ea818e210",
            "7d35322b4cfcfe8a885243b21f61cdd5031c420fa6a655699f9fd15442921d90ec39baa0638841f4",
            "d4cbad33f3fa29a21490ec858737540c79083e9a9965a67e7f453d10a4876430e6ea818f2107d353",
            "2c34cacbe084f19157e709d10a4876435d01819a5699597c109e322afce10e885243b26ba030334a",
            "d32b2f8211c6455f9c247442921d95740606695a6565f04238c8abf384c3a21490ecae80c0cd2b4c",
            "acbe084719157e709e1d10a48765d01819a5699597c108c322afce13d0e885243b3a030334ad32b2",
            "f8211a6455f9c27887442921df40606695a6565f04234c8abf384f243a21490ee80c0cd2b5cacbe0",
            "84699157e709e321d10a487501819a56b9597c108d322afce13c590e885243a030334ad72b2f8211",
            "a6455f9c278ec87442921c0606695ae565f04234c8abf384f1b643a2149080c0cd2b5dacbe084699",
            "157e709e33b21d10a4801819a56ba597c108d322afce13c65d90e88524030334ad74b2f8211a6455",
            "f9c278c8ec87442920606695ae865f04234caabf384f1907643a21490c0cd2b5d0cbe084699557e7",
            "09e3203b21d10a49819a56ba097c108d32aafce13c6461d90e885230334ad7402f8211a6575f9c27",
            "8c890ec874429606695ae805f04234cacbf384f191487643a214c0cd2b5d01be084699597e709e32",
            "2a43b21d10a019a56ba037c108d32b2fce13c645521d90e8850334ad7406f8211a6565f9c278c8a8",
            "90ec8744286695ae80cf04234cacbf384f19156487643a210cd2b5d018e084699597e709e322ad24",
            "3b21d1099a56ba030c108d32b2fce13c6455e921d90e88334ad740608211a6565f9c278c8abd490e",
            "c87446695ae80c004234cacbf384f19157ca487643a24d2b5d0181084699597c709e322afc5243b2",
            "1d11a56ba0303108d32b2f8e13c6455f82921d90e8b4ad740606211a6565f1c278c8abf21490ec87",
            "4695ae80c0c4234cacbe184f19157e50a487643a52b5d0181984699597c109e322afcc85243b21d2",
            "56ba0303308d32b2f8213c6455f9c42921d90ecad740606611a6565f04278c8abf3a21490ec8715a",
            "e80c0cd234cacbe084f19157e7110a487643ab5d01819a4699597c109e322afce2885243b21d6ba0",
            "303348d32b2f8213c6455f9c3442921d90ad740606691a6565f04278c8abf387a21490ec85ae80c0",
            "cd2873f544c78f7c165669e517f3f32d3a21490ec80e7ea898f3ef82cacd38a2fe7e65a9d10a4876",
            "41cfd5131e5df05959a7545fcfccb50e885243b239faa263c9be0b2b34ee8bf9f996a07442921d97",
            "3f544c7917c165669dd17f3f32d4c3a21490ece7ea898f20f82cacd3be2fe7e65a921d10a4876cfd",
            "5131e43f05959a7785fcfccb5290e885243b9faa263c87e0b2b34ef4bf9f996a5487442921d3f544",
            "c790fc165669ded7f3f32d4a643a21490e7ea898f21d82cacd3bdefe7e65a94321d10a487fd5131e",
            "43905959a77bdfcfccb528d90e885243faa263c8720b2b34ef7ff9f996a516c87442921f544c790e",
            "6165669defbf3f32d4a2f643a21490ea898f21ce2cacd3bdf3e7e65a945bb21d10a48d5131e439e5",
            "959a77be3cfccb528b9d90e88524aa263c873eb2b34ef7c39f996a5178ec8744292544c790e7f656",
            "69def833f32d4a2f87643a2149a898f21cfccacd3bdf067e65a945fc3b21d10a45131e439fb959a7",
            "7be08fccb528bfa1d90e8852a263c873f52b34ef7c15f996a517f10ec87442944c790e7ea5669def",
            "82ff32d4a2fe487643a214898f21cfd4acd3bdf05be65a945fca43b21d10a131e439fab59a77be0b",
            "3ccb528bf9921d90e885263c873f54b34ef7c167996a517f3c90ec874424c790e7ea9669def82cb3",
            "2d4a2fe7a487643a2198f21cfd50cd3bdf059665a945fcfd243b21d1031e439faa39a77be0b28cb5",
            "28bf9fa921d90e8863c873f54534ef7c165596a517f3f1490ec8744c790e7ea8869def82caf2d4a2",
            "fe7e0a487643a28f21cfd512d3bdf0595a5a945fcfc85243b21d11e439faa27a77be0b2b0b528bf9",
            "f9c2921d90e83c873f544d4ef7c165656a517f3f321490ec874790e7ea8989def82caced4a2fe7e6",
            "10a487643af21cfd51313bdf059599a945fcfcc885243b21de439faa26277be0b2b37528bf9f9944",
            "2921d90ec873f544c6ef7c16566aa517f3f32a21490ec8790e7ea898fdef82cacd14a2fe7e65d10a",
            "48764321cfd5131fbdf05959a6945fcfccb6885243b21439faa263d7be0b2b34d28bf9f996f44292",
            "1d90",
        ),
    ),
    (
        172,
        concat!(
            "e8908610917aac21e464fb55843c8c9f36a81b91c7af448430848b55843c8c9f6ab0879193eed503",
            "7238f4fa242184244ab0879193ed5610f2327ddaa06e471e97d1210c21235610f2327daac21e464f",
            "b3540dc8e3d3be890861090ac21e464fb55843c8c9f6ea81b91c7a65f4484308495843c8c9f6ab08",
            "79193ed55037238f4d2fa24218424b0879193ed5610f2327daaa06e471e9b17d1210c213610f2327",
            "daac21e464fb5540dc8e3d368be89086108c21e464fb55843c8c9f6aa81b91c7a6d45f4484308584",
            "3c8c9f6ab0879193ed55037238f4da22fa24218430879193ed5610f2327daaa06e471e9b5917d121",
            "0c2010f2327daac21e464fb55c0dc8e3d36a48be890861021e464fb55843c8c9f6ab01b91c7a6d52",
            "45f448430843c8c9f6ab0879193ed56037238f4daa122fa242184879193ed5610f2327daac06e471",
            "e9b540917d1210c30f2327daac21e464fb5580dc8e3d36a8848be8908601e464fb55843c8c9f6ab0",
            "9b91c7a6d504245f4484303c8c9f6ab0879193ed56137238f4daa02122fa2421879193ed5610f232",
            "7daac26e471e9b54010917d1210cf2327daac21e464fb55845c8e3d36a810848be89087e464fb558",
            "43c8c9f6ab08391c7a6d50384245f44843c8c9f6ab0879193ed5610f238f4daa06c2122fa2421919",
            "3ed5610f2327daac21e471e9b540d610917d12112327daac21e464fb55843c8e3d36a81b30848be8",
            "908464fb55843c8c9f6ab08791c7a6d5037184245f44848c9f6ab0879193ed5610f238f4daa06e0c",
            "2122fa243193ed5610f2327daac21e471e9b540dc8610917d120327daac21e464fb55843c8e3d36a",
            "81b9430848be89064fb55843c8c9f6ab08791c7a6d503722184245f448c9f6ab0879193ed5610f23",
            "8f4daa06e410c2122fa2593ed5610f2327daac21e471e9b540dc808610917d1327daac21e464fb55",
            "843c8e3d36a81b918430848be884fb55843c8c9f6ab08791c7a6d50372342184245f449f6ab08791",
            "93ed5610f230f4daa06e47210c2122fa33ed5610f2327daac21e461e9b540dc8e908610917d07daa",
            "c21e464fb55843c8cbd36a81b91c48430848be8fb55843c8c9f6ab0879197a6d5037238242184245",
            "f5f6ab0879193ed5610f23274daa06e4711210c2122fbed5610f2327daac21e464e9b540dc8e3890",
            "8610917ddaac21e464fb55843c8c9d36a81b91c7448430848bfb55843c8c9f6ab0879193a6d50372",
            "38fa242184245f6ab0879193ed5610f2327cdaa06e471ed1210c2122ed5610f2327daac21e464f9b",
            "540dc8e3d2a9ef0dcd83d1210c2122ef1c4ec0ab6036761ef2a9553de1b9b05e8908610915e389d8",
            "156c86cec3de552aa7bc373609f448430848bc713b02ad90d9d87bcaa454f786e6c12fa242184247",
            "8e276055b29b3b0f79548a9ef0dcd8257d1210c21231c4ec0ab65b6761ef2a9053de1b9b04abe890",
            "861092389d8156cbecec3de5520a7bc37360945f448430848713b02ad97d9d87bcaa414f786e6c12",
            "a2fa24218424e276055b2f33b0f7954839ef0dcd825517d1210c211c4ec0ab65e6761ef2a9063de1",
            "b9b04aa8be8908610b89d8156cbc4ec3de5520d7bc3736095445f4484308713b02ad9789d87bcaa4",
            "1bf786e6c12a922fa2421842276055b2f1bb0f7954836ef0dcd82552917d1210c204ec0ab65e3f61",
            "ef2a906cde1b9b04aa648be89086109d8156cbc76c3de5520d9bc37360954e245f44843093b02ad9",
            "78e587bcaa41b3786e6c12a9e122fa24218676055b2f1c30f79548367f0dcd82553d0917d1210c0e",
            "c0ab65e38e1ef2a906cee1b9b04aa7a848be890861d8156cbc7143de5520d9dc37360954f64245f4",
            "48433b02ad978e207bcaa41b3b86e6c12a9ee2122fa2421b6055b2f1c48f7954836760dcd82553de",
            "10917d1210ec0ab65e3899ef2a906cec1b9b04aa7bd0848be890858156cbc713bde5520d9d837360",
            "954f7984245f4484302ad978e277bcaa41b3b06e6c12a9ef0c2122fa2422055b2f1c4ef795483676",
            "1dcd82553de0610917d12100ab65e389def2a906cec3b9b04aa7bc230848be8908156cbc713b5e55",
            "20d9d877360954f786184245f44842ad978e2763caa41b3b0fe6c12a9ef0d0c2122fa24055b2f1c4",
            "ec7954836761ecd82553de1a8610917d120ab65e389d872a906cec3d9b04aa7bc36430848be89156",
            "cbc713b065520d9d87b360954f786e2184245f44aad978e27604aa41b3b0f76c12a9ef0dc10c2122",
            "fa255b2f1c4ec0954836761efd82553de1b908610917d12b65e389d812a906cec3deb04aa7bc3728",
            "430848be896cbc713b02d520d9d87bc60954f786e642184245f46d978e276052a41b3b0f79c12a9e",
            "f0dcd210c2122fa1b2f1c4ec0ad4836761ef282553de1b9a908610917d365e389d8152906cec3de5",
            "04aa7bc373648430848beacbc713b02ad20d9d87bca0954f786e6c242184245f5978e276055a41b3",
            "b0f79512a9ef0dcd91210c2122fb2f1c4ec0ab4836761ef2a2553de1b9b08908610917e5e389d815",
            "6906cec3de554aa7bc37361448430848bcbc713b02ada0d9d87bcaa954f786e6c1a242184245d78e",
            "276055b41b3b0f79542a9ef0dcd82871d89faa4fa242184245fc989e10d56553de1b9b050e3b13f5",
            "49bd1210c2122f9313c21aadaa7bc3736081c7627ea937e8908610917262784355b54f786e6c1238",
            "ec4fd5269f448430848e4c4f086ab7a9ef0dcd82471d89faa4d2fa242184244989e10d56f53de1b9",
            "b04ae3b13f549a17d1210c2121313c21aadfa7bc3736095c7627ea9340be89086109262784355be4",
            "f786e6c12b8ec4fd526845f44843084cc4f086ab7c9ef0dcd82551d89faa4d0e2fa2421842189e10",
            "d56f93de1b9b04aa3b13f549a1d17d1210c21313c21aadf27bc373609547627ea934388be8908610",
            "e2784355be4f786e6c12a8ec4fd52687245f448430844f086ab7c9ef0dcd82553d89faa4d0e122fa",
            "24218409e10d56f93de1b9b04aa7b13f549a1c4917d1210c213c21aadf26bc37360954f627ea9343",
            "8c48be8908612784355be4c786e6c12a9ec4fd526871c245f448430cf086ab7c98f0dcd82553d89f",
            "aa4d0e3a122fa242181e10d56f931e1b9b04aa7b13f549a1c750917d1210c3c21aadf262c3736095",
            "4f627ea93438ec848be89086784355be4c486e6c12a9ee4fd526871d84245f448437086ab7c9890d",
            "cd82553de9faa4d0e3b02122fa2421e10d56f93131b9b04aa7bd3f549a1c76210917d1210c21aadf",
            "262737360954f787ea93438ec70848be890804355be4c4f6e6c12a9ef0fd526871d8984245f44840",
            "86ab7c989edcd82553de1faa4d0e3b10c2122fa24210d56f9313cb9b04aa7bc3f549a1c762461091",
            "7d12121aadf262787360954f787ea93438ec4c30848be890c355be4c4f0e6c12a9ef0dd526871d89",
            "e184245f44806ab7c989e1cd82553de1baa4d0e3b13d0c2122fa240d56f9313c29b04aa7bc37549a",
            "1c7627c8610917d121aadf262784360954f786ea93438ec4fc430848be89355be4c4f086c12a9ef0",
            "dd526871d89f82184245f44eab7c989e10d82553de1b8a4d0e3b13f610c2122fa2556f9313c21b04",
            "aa7bc37349a1c7627e908610917d12adf262784360954f786e693438ec4fd48430848be8d5be4c4f",
            "086c12a9ef0dcd26871d89faa42184245f42b7c989e10d82553de1b9a4d0e3b13f55210c2122fa56",
            "f9313c21a04aa7bc37369a1c7627ea8908610917d2df262784350954f786e6d3438ec4fd50484308",
            "48bedbe4c4f086a12a9ef0dcd86871d89faa6242184245f37c989e10d52553de1b9b0d0e3b13f549",
            "1210c2122fef9313c21aa4aa7bc37361a1c7627ea928908610917df262784355954f786e6c1438ec",
            "4fd527448430848bbe4c4f086ab92afc8dc70bf26278435581b3b0f7954f448430848b255f91b8e1",
            "7e4c4f086ab436761ef2a97a2421842454abf2371c2dc989e10d56c6cec3de5527d1210c2122957e",
            "46e38599313c21aadcd9d87bcaa43e8908610912afc8dc70b3262784355bdb3b0f795485f4484308",
            "4855f91b8e1644c4f086ab7f6761ef2a902fa24218424abf2371c2c8989e10d56facec3de552097d",
            "1210c21257e46e38593313c21aadf19d87bcaa418be89086109afc8dc70b2462784355be73b0f795",
            "48345f448430845f91b8e164ac4f086ab7ca761ef2a906a2fa2421842bf2371c2c9589e10d56f90e",
            "c3de5520d917d1210c217e46e38592b13c21aadf25d87bcaa41b48be8908610fc8dc70b254278435",
            "5be4fb0f7954836245f4484308f91b8e164aa4f086ab7c9b61ef2a906c922fa242184f2371c2c956",
            "9e10d56f932c3de5520d98917d1210c2e46e38592af3c21aadf26187bcaa41b3848be890861c8dc7",
            "0b255e784355be4c70f795483674245f44843091b8e164abef086ab7c98a1ef2a906cea122fa2421",
            "82371c2c957fe10d56f93103de5520d9d90917d1210c46e38592afdc21aadf26247bcaa41b3b0848",
            "be890868dc70b255f984355be4c4cf79548367604245f448431b8e164abf3086ab7c989def2a906c",
            "ec42122fa2421371c2c957e410d56f9313fde5520d9d8610917d12106e38592afc821aadf2627bbc",
            "aa41b3b0b0848be8908dc70b255f904355be4c4f37954836761984245f4484b8e164abf2286ab7c9",
            "89e2f2a906cec38c2122fa24271c2c957e470d56f9313c1e5520d9d878610917d121e38592afc8c1",
            "aadf262787caa41b3b0f430848be890c70b255f91a355be4c4f0b954836761ea184245f4488e164a",
            "bf2366ab7c989e132a906cec3d90c2122fa241c2c957e46ed56f9313c225520d9d87b88610917d12",
            "38592afc8ddaadf2627840aa41b3b0f78430848be8970b255f91b955be4c4f08554836761ef42184",
            "245f44e164abf2370ab7c989e10ea906cec3de210c2122fa2c2c957e46e356f9313c219520d9d87b",
            "c908610917d18592afc8dc6adf26278436a41b3b0f7948430848be80b255f91b8f5be4c4f0869483",
            "6761ef2a42184245f4164abf2371cb7c989e10d6906cec3de51210c2122fa2c957e46e396f9313c2",
            "1a920d9d87bca8908610917d592afc8dc70df26278435641b3b0f795448430848beb255f91b8e1be",
            "4c4f086a8836761ef2aa242184245f64abf2371c37c989e10d5506cec3de5551210c2122fc957e46",
            "e384f9313c21aae0d9d87bcaa68908610917",
        ),
    ),
];
