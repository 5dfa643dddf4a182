abstract class Abstract11 extends Abstract5 {
}
