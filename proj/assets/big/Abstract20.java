abstract class Abstract20 extends Abstract11 {
}
