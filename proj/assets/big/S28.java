class S28 extends Abstract19 {
  void enter() {
    new S49();
    switch (event) {
      case EV803:
        send("msg16");
        new S32();
        try {
          send("msg3");
        } finally {
          send("msg1");
        }
        break;
    }
    try {
      try {
        new S35();
        send("msg5");
      } catch (IllegalStateException e) {
        send("msg5");
        log("note");
      }
      switch (event) {
        case EV804:
          send("msg10");
          break;
      }
    } catch (IOException e) {
      switch (event) {
        case EV805:
          log("note");
          try {
            log("note");
            log("note");
          } catch (IllegalStateException e) {
            new S83();
            log("note");
          } finally {
            send("msg7");
          }
          break;
        case EV806:
          if (x1 > 0) {
            new S69();
            send("msg14");
            new S50();
            send("msg10");
          }
          break;
        case EV807:
          new S48();
          send("msg10");
          send("msg17");
          new S27();
          break;
      }
    } finally {
      try {
        new S55();
      } catch (TimeoutException e) {
        new S27();
        try {
          new S66();
          send("msg11");
          new S42();
        } catch (IllegalStateException e) {
          send("msg19");
          new S98();
          send("msg13");
        } catch (TimeoutException e) {
          send("msg16");
          send("msg11");
          send("msg13");
        }
        new S30();
      }
      try {
        new S58();
        send("msg15");
        new S5();
      } finally {
        log("note");
        send("msg12");
        send("msg12");
      }
    }
    log("note");
  }
  void exit() {
    send("msg3");
    new S68();
    if (x2 > 0) {
      send("msg6");
      try {
        new S43();
        new S75();
      } catch (IOException e) {
        send("msg16");
        try {
          new S18();
          new S10();
        } catch (IllegalStateException e) {
          send("msg14");
        } catch (TimeoutException e) {
          new S34();
        }
      } finally {
        log("note");
        new S28();
        send("msg6");
        new S67();
      }
      log("note");
    } else {
      new S82();
      if (x1 > 0) {
        new S58();
      } else {
        send("msg2");
        send("msg0");
      }
      new S15();
      send("msg16");
    }
  }
  void handle() {
    new S89();
    switch (event) {
      case EV808:
        new S65();
        break;
      case EV809:
        new S11();
        try {
          new Helper();
          log("note");
          send("msg17");
        } finally {
          new S76();
          try {
            send("msg18");
          } finally {
            new S46();
            new S52();
            new S83();
          }
          log("note");
          send("msg0");
        }
        if (x9 > 0) {
          new S97();
          switch (event) {
            case EV810:
              new S78();
              break;
            case EV811:
              send("msg4");
              send("msg0");
              break;
          }
          switch (event) {
            case EV812:
              send("msg4");
              new S24();
              send("msg11");
              break;
          }
        } else {
          try {
            send("msg19");
            send("msg13");
            new S80();
            new S87();
          } catch (IllegalStateException e) {
            send("msg0");
          } finally {
            new S37();
            send("msg13");
            send("msg3");
            new S49();
          }
        }
        break;
    }
    switch (event) {
      case EV813:
        send("msg14");
        if (x3 > 0) {
          new S41();
          new S32();
          new S71();
          log("note");
        }
        new S91();
        break;
      case EV814:
        if (x9 > 0) {
          send("msg18");
          new Helper();
        }
        break;
      case EV815:
        switch (event) {
          case EV816:
            new S96();
            if (x8 > 0) {
              new S38();
              new S66();
              new S39();
            }
            new S25();
            break;
          case EV817:
            try {
              new S56();
            } finally {
              new S42();
            }
            new S91();
            break;
          case EV818:
            new S75();
            if (x0 > 0) {
              send("msg3");
              new S18();
              new S70();
            }
            new S23();
            break;
        }
        new S13();
        send("msg5");
        break;
    }
    send("msg9");
  }
  void tick() {
    new S8();
    if (x2 > 0) {
      switch (event) {
        case EV819:
          if (x6 > 0) {
            new S58();
            log("note");
            send("msg8");
            new S88();
          }
          new S16();
          new S52();
          break;
        case EV820:
          send("msg14");
          send("msg16");
          send("msg15");
          break;
      }
      send("msg2");
    } else {
      send("msg6");
    }
  }
  public void reset() {
    try {
      if (x3 > 0) {
        if (x1 > 0) {
          new S43();
          send("msg12");
        } else {
          log("note");
          send("msg9");
        }
        new S58();
        new S8();
      }
      new S28();
      switch (event) {
        case EV821:
          if (x2 > 0) {
            new S33();
          } else {
            new S46();
            send("msg8");
            log("note");
          }
          new S62();
          new S9();
          new S66();
          break;
        case EV822:
          log("note");
          send("msg3");
          break;
        case EV823:
          log("note");
          switch (event) {
            case EV824:
              send("msg16");
              break;
            case EV825:
              send("msg7");
              break;
          }
          break;
      }
    } catch (IllegalStateException e) {
      send("msg10");
    } catch (IllegalStateException e) {
      switch (event) {
        case EV826:
          try {
            new S62();
          } catch (TimeoutException e) {
            log("note");
          } catch (IOException e) {
            log("note");
            new S40();
          }
          new S69();
          try {
            new S5();
            send("msg0");
            new S37();
          } catch (IllegalStateException e) {
            send("msg17");
            send("msg12");
            new S37();
            send("msg18");
          } catch (TimeoutException e) {
            send("msg18");
            send("msg3");
            send("msg19");
            send("msg14");
          }
          if (x8 > 0) {
            log("note");
            send("msg5");
            send("msg12");
            send("msg12");
          } else {
            log("note");
            new S59();
            log("note");
            new S68();
          }
          break;
        case EV827:
          new S48();
          if (x3 > 0) {
            send("msg4");
          } else {
            send("msg18");
          }
          try {
            send("msg12");
          } catch (IllegalStateException e) {
            new S71();
            new S34();
          } catch (IOException e) {
            new S21();
          }
          break;
        case EV828:
          try {
            send("msg7");
          } catch (TimeoutException e) {
            new S49();
            new S68();
          }
          try {
            log("note");
            new S5();
          } catch (IOException e) {
            log("note");
            new S66();
            new S60();
            new S59();
          } finally {
            send("msg15");
            send("msg18");
          }
          if (x7 > 0) {
            send("msg8");
            new Helper();
            new S100();
            new S63();
          }
          try {
            new S44();
            new State();
            new S72();
            new S52();
          } finally {
            send("msg2");
          }
          break;
      }
      send("msg10");
      new S29();
      try {
        try {
          new State();
        } catch (IOException e) {
          send("msg3");
          new S26();
        }
        if (x5 > 0) {
          new S92();
          send("msg8");
          new S1();
          log("note");
        } else {
          send("msg10");
          new S36();
          log("note");
          send("msg14");
        }
        send("msg16");
      } catch (IOException e) {
        new S32();
      } catch (IllegalStateException e) {
        new S77();
      }
    }
    send("msg3");
  }
  void open() {
    switch (event) {
      case EV829:
        new S21();
        new State();
        new S23();
        break;
    }
    send("msg6");
    new S28();
    switch (event) {
      case EV830:
        new S63();
        try {
          if (x9 > 0) {
            new S87();
            new S45();
          }
          try {
            send("msg6");
            log("note");
            log("note");
          } catch (IOException e) {
            send("msg13");
            new S57();
            send("msg4");
            new S40();
          }
        } catch (TimeoutException e) {
          switch (event) {
            case EV831:
              new State();
              break;
          }
          send("msg10");
          send("msg8");
        } catch (IOException e) {
          switch (event) {
            case EV832:
              new S68();
              break;
            case EV833:
              new S84();
              new Helper();
              send("msg2");
              send("msg12");
              break;
            case EV834:
              send("msg13");
              send("msg10");
              new S56();
              new S49();
              break;
          }
          send("msg1");
          new S73();
          new S71();
        }
        new S35();
        break;
      case EV835:
        log("note");
        break;
      case EV836:
        new S28();
        try {
          if (x6 > 0) {
            new S52();
          }
          send("msg9");
          try {
            send("msg12");
            new S31();
          } catch (IOException e) {
            send("msg12");
            new S21();
            new S56();
            new S72();
          } catch (IllegalStateException e) {
            new S1();
          }
          new S29();
        } catch (TimeoutException e) {
          send("msg16");
        } catch (TimeoutException e) {
          new S23();
          new S72();
          try {
            new S18();
            log("note");
          } catch (TimeoutException e) {
            new S62();
            send("msg16");
            send("msg16");
            send("msg12");
          }
          send("msg15");
        }
        break;
    }
  }
  void close() {
    switch (event) {
      case EV837:
        new S89();
        try {
          if (x3 > 0) {
            send("msg4");
            new S31();
          }
        } finally {
          if (x3 > 0) {
            log("note");
          } else {
            log("note");
          }
          if (x0 > 0) {
            send("msg1");
            new S2();
          }
          switch (event) {
            case EV838:
              send("msg5");
              send("msg6");
              new State();
              new S6();
              break;
            case EV839:
              new S35();
              new Helper();
              send("msg14");
              break;
          }
          new S28();
        }
        if (x8 > 0) {
          send("msg16");
          switch (event) {
            case EV840:
              log("note");
              send("msg2");
              break;
            case EV841:
              send("msg0");
              send("msg10");
              new S12();
              send("msg6");
              break;
          }
          send("msg19");
        }
        break;
    }
    new S92();
    if (x0 > 0) {
      new S23();
      new S89();
    }
    try {
      send("msg5");
      send("msg8");
      new S40();
    } catch (IOException e) {
      log("note");
      new S92();
      new S70();
    }
  }
  public void start() {
    try {
      send("msg4");
      new Helper();
      new S42();
    } catch (IOException e) {
      new S9();
    } catch (IllegalStateException e) {
      send("msg14");
      try {
        new S90();
        new S67();
        new Helper();
      } catch (IOException e) {
        if (x5 > 0) {
          send("msg7");
          send("msg11");
        }
        switch (event) {
          case EV842:
            new S24();
            break;
          case EV843:
            new S52();
            send("msg15");
            new S64();
            send("msg11");
            break;
          case EV844:
            send("msg2");
            send("msg13");
            log("note");
            break;
        }
        send("msg14");
      } catch (TimeoutException e) {
        try {
          send("msg17");
          new S48();
          new S72();
          send("msg1");
        } catch (IOException e) {
          new S1();
          new S41();
          send("msg1");
        } catch (IOException e) {
          new S85();
        }
        send("msg4");
        new S13();
        switch (event) {
          case EV845:
            send("msg12");
            break;
        }
      }
      try {
        new S74();
      } catch (TimeoutException e) {
        log("note");
        try {
          send("msg18");
        } catch (IllegalStateException e) {
          new S93();
          new S36();
          new S77();
          new S78();
        } finally {
          new S68();
          send("msg17");
          send("msg2");
        }
        new S81();
      }
      new S71();
    }
  }
  void stop() {
    log("note");
    new S98();
    new State();
  }
  void pause() {
    new S22();
    new S61();
  }
}
