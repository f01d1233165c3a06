"""
Lark grammar of the document language
"""

DOCUMENT_GRAMMAR = r"""
    document: field_decl statement*

    field_decl: "field" FIELDNAME ["(" name_list ")"] ";"
    name_list: SYMBOL ("," SYMBOL)*

    ?statement: gen_decl
              | derivation_decl
              | endomorphism_decl
              | kernel_decl
              | ddkernel_decl
              | difference_decl
              | hypothesis_decl
              | preimage_decl
              | perfect_decl

    gen_decl: "gen" SYMBOL "trans" ";"           -> gen_trans
            | "gen" SYMBOL "alg" expr ";"        -> gen_alg

    derivation_decl: "derivation" SYMBOL "{" image* "}"
    endomorphism_decl: "endomorphism" SYMBOL "{" image* "}"
    image: SYMBOL "->" expr ";"

    kernel_decl: "kernel" SYMBOL "over" SYMBOL params "{" entry* "}"
    ddkernel_decl: "ddkernel" SYMBOL "over" SYMBOL "," SYMBOL params "{" entry* "}"
    difference_decl: "difference" SYMBOL "over" SYMBOL params "{" (entry | assume)* "}"
    params: "(" param ("," param)* ")"
    param: SYMBOL "=" INT

    entry: SYMBOL "trans" ";"                    -> entry_trans
         | SYMBOL "alg" expr ";"                 -> entry_alg
         | SYMBOL "=" expr ";"                   -> entry_value
    assume: "assume" SYMBOL ";"

    hypothesis_decl: "hypothesis" SYMBOL "for" SYMBOL "{" hyp_item* "}"
    ?hyp_item: SYMBOL "=" INT ";"                -> hyp_int
             | SYMBOL "=" pair ("," pair)* ";"   -> hyp_pairs
             | SYMBOL "=" name_list ";"          -> hyp_names
             | "choice" SYMBOL "=" expr ";"      -> hyp_choice
    pair: "(" INT "," INT ")"

    preimage_decl: "preimage" SYMBOL "over" SYMBOL "," SYMBOL "{" plan_item* "}"
    ?plan_item: SYMBOL "=" expr ";"              -> plan_setting
              | "step" INT "trans" ";"           -> step_trans
              | "step" INT "alg" expr ";"        -> step_alg
              | "step" INT "=" expr ";"          -> step_value

    perfect_decl: "perfect" SYMBOL "over" SYMBOL "," SYMBOL "{" perfect_item* "}"
    ?perfect_item: "constants" expr ("," expr)* ";"  -> perfect_constants
                 | SYMBOL "=" INT ";"                -> perfect_setting

    ?expr: sum
    ?sum: product
        | sum "+" product                        -> add
        | sum "-" product                        -> sub
    ?product: unary
            | product "*" unary                  -> mul
            | product "/" unary                  -> div
    ?unary: power
          | "-" unary                            -> neg
    ?power: atom
          | atom "^" INT                         -> pow
    ?atom: INT                                   -> number
         | SYMBOL                                -> symbol
         | "(" sum ")"

    FIELDNAME: /Q|F[0-9]+/
    SYMBOL: /[A-Za-z_][A-Za-z0-9_]*(\[[0-9]+\])*/
    INT: /[0-9]+/

    COMMENT: /#[^\n]*/
    %import common.WS
    %ignore WS
    %ignore COMMENT
"""

# Precedence ladder shared by the parser and the canonical printer.
PRECEDENCE = {"+": 1, "-": 1, "*": 2, "/": 2, "neg": 3, "^": 4, "atom": 5}
